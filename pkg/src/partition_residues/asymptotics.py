"""Main-term predictions for Q_n(zeta) and for weighted sums of p(a, b, n).

A prediction is an :class:`AsymptoticProfile`.  For the oscillating kinds it
reads

    amplitude * n**envelope_power * exp(2 lambda1 sqrt(n)) * oscillation(n)

where ``oscillation`` is ``cos(phase + 2 lambda2 sqrt(n) + 2 pi turn n)`` (or a
sum of two such cosines for the omega pair).  Profiles with ``target="qn"``
describe the complex coefficient Q_n(zeta_b**a) instead, with the cosine
replaced by the corresponding complex exponential.

The two exact kinds (``equidistribution-main`` and ``qn-minus-one``) use exact
p(n) or (-1)**n p_DO(n) as their main term instead of an asymptotic formula.
"""

from __future__ import annotations

import cmath
import dataclasses
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .errors import BoundaryError, KindError
from .exact_engine.cyclotomic import divisors, is_cyclotomic_root, poly_eval_root, root_of_unity
from .exact_engine.oracles import distinct_odd_count, partition_number
from .special_functions import (
    PSI1,
    PSI2,
    PSI3,
    L_at_root,
    cpow,
    csqrt,
    dilog_unit,
    gamma_third_constant,
    omega,
)

log = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi

EQUIDISTRIBUTION = "equidistribution-main"
COSINE = "cosine-single"
OMEGA_PAIR = "cosine-pair-omega"
ZETA3 = "zeta3-special"
MINUS_ONE = "qn-minus-one"
KINDS = (EQUIDISTRIBUTION, COSINE, OMEGA_PAIR, ZETA3, MINUS_ONE)
EXACT_KINDS = (EQUIDISTRIBUTION, MINUS_ONE)

QN = "qn"
COMBINATION = "combination"

ROOT_TOL = 1e-9
TIE_TOL = 1e-12

# growth rates of the exactly-known main terms
LAMBDA_ONE = math.pi / math.sqrt(6.0)  # p(n)
LAMBDA_MINUS_ONE = math.pi / (2.0 * math.sqrt(6.0))  # Q_n(-1)
LAMBDA_THIRD = math.pi / (3.0 * math.sqrt(6.0))  # Q_n(zeta_3)


def normalize_phase(phi: float) -> float:
    out = math.fmod(phi, TWO_PI)
    if out < 0:
        out += TWO_PI
    if out >= TWO_PI:
        out = 0.0
    return out


def polar(z: complex) -> tuple[float, float]:
    """Modulus and phase in [0, 2 pi)."""
    return abs(z), normalize_phase(cmath.phase(z)) if z != 0 else 0.0


@dataclass(frozen=True)
class OscillationTerm:
    """One cosine B cos(base + phase + 2 pi turn n + ...) inside an omega pair."""

    amplitude: float
    phase: float
    turn: Fraction


@dataclass(frozen=True)
class AsymptoticProfile:
    b: int
    kind: str
    lambda1: float
    lambda2: float
    amplitude: float
    phase: float
    envelope_power: float
    dominant: int
    target: str = COMBINATION
    regime: str | None = None
    parity_turn: Fraction | None = None
    secondary: tuple[OscillationTerm, OscillationTerm] | None = None
    coefficient: Fraction | float | None = None
    weights: tuple | None = None
    d0: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.target not in (QN, COMBINATION):
            raise ValueError(f"unknown target {self.target!r}")
        if not self.amplitude >= 0:
            raise ValueError(f"amplitude must be nonnegative, got {self.amplitude}")
        if not 0 <= self.phase < TWO_PI:
            raise ValueError(f"phase must lie in [0, 2 pi), got {self.phase}")
        if not self.lambda1 > 0:
            raise ValueError(f"lambda1 must be positive, got {self.lambda1}")
        if (self.kind == OMEGA_PAIR) != (self.secondary is not None):
            raise ValueError("secondary terms are present exactly for the omega pair kind")
        if (self.kind in EXACT_KINDS) != (self.coefficient is not None):
            raise ValueError("an exact coefficient is present exactly for the exact kinds")
        if self.kind == ZETA3 and self.parity_turn is None:
            raise ValueError("the zeta_3 kind needs its discrete phase")
        if self.kind == OMEGA_PAIR and self.parity_turn is not None:
            raise ValueError("the omega pair carries its discrete phases in the secondary terms")
        if self.target == COMBINATION and self.weights is not None and len(self.weights) != self.b:
            raise ValueError("weight vector length must equal b")

    @property
    def lam(self) -> complex:
        return complex(self.lambda1, self.lambda2)

    def log_envelope(self, n: int) -> float:
        """log of amplitude * n**p * exp(2 lambda1 sqrt(n))."""
        if self.amplitude == 0:
            return -math.inf
        return math.log(self.amplitude) + self.envelope_power * math.log(n) + 2.0 * self.lambda1 * math.sqrt(n)

    def exact_base(self, n: int) -> int:
        """p(n) or (-1)**n p_DO(n) for the exact kinds."""
        if self.kind == EQUIDISTRIBUTION:
            return partition_number(n)
        if self.kind == MINUS_ONE:
            return (-1) ** n * distinct_odd_count(n)
        raise KindError(f"{self.kind} has no exact main term")

    def rotation(self, n: int) -> complex:
        """Unit-modulus oscillating factor(s) at n, before taking real parts."""
        base = self.phase + 2.0 * self.lambda2 * math.sqrt(n)
        if self.kind == OMEGA_PAIR:
            return sum(
                t.amplitude * cmath.exp(1j * (base + t.phase + _turn_angle(t.turn, n)))
                for t in self.secondary
            )
        angle = base + (_turn_angle(self.parity_turn, n) if self.parity_turn is not None else 0.0)
        return cmath.exp(1j * angle)


def _turn_angle(turn: Fraction, n: int) -> float:
    return TWO_PI * float((turn * n) % 1)


def _check_modulus(b: int) -> None:
    if not isinstance(b, int) or b < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {b!r}")


def conjugate_profile(profile: AsymptoticProfile, dominant: int) -> AsymptoticProfile:
    """Profile of the complex conjugate sequence."""
    secondary = None
    if profile.secondary is not None:
        secondary = tuple(
            OscillationTerm(t.amplitude, normalize_phase(-t.phase), (-t.turn) % 1) for t in profile.secondary
        )
    parity = None if profile.parity_turn is None else (-profile.parity_turn) % 1
    return dataclasses.replace(
        profile,
        lambda2=-profile.lambda2,
        phase=normalize_phase(-profile.phase),
        parity_turn=parity,
        secondary=secondary,
        dominant=dominant,
    )


def qn_profile(b: int, a: int) -> AsymptoticProfile:
    """Main term of Q_n(zeta_b**a).

    a = 0 and a = b/2 use the exact p(n) and (-1)**n p_DO(n).  For a > b/2 the
    profile is the conjugate of the one for b - a.
    """
    _check_modulus(b)
    a %= b
    if a == 0:
        return AsymptoticProfile(
            b, EQUIDISTRIBUTION, LAMBDA_ONE, 0.0, 1.0 / (4.0 * math.sqrt(3.0)), 0.0, -1.0,
            dominant=0, target=QN, regime=PSI1, coefficient=Fraction(1),
        )
    if 2 * a == b:
        return AsymptoticProfile(
            b, MINUS_ONE, LAMBDA_MINUS_ONE, 0.0, 1.0 / (2.0 * 24.0**0.25), 0.0, -0.75,
            dominant=a, target=QN, regime=PSI2, parity_turn=Fraction(1, 2), coefficient=Fraction(1),
        )
    if 2 * a > b:
        return conjugate_profile(qn_profile(b, b - a), dominant=a)

    zeta = root_of_unity(b, a)
    name, lam = L_at_root(a, b)
    if 3 * a == b:
        const = gamma_third_constant() / (2.0 * (6.0 * math.pi) ** (2.0 / 3.0))
        amp, phase = polar(const)
        # zeta_3**(-2n) = exp(2 pi i n / 3)
        return AsymptoticProfile(
            b, ZETA3, LAMBDA_THIRD, 0.0, amp, phase, -2.0 / 3.0,
            dominant=a, target=QN, regime=PSI3, parity_turn=Fraction(1, 3),
        )
    if name == PSI1:
        const = csqrt(1 - zeta) * cpow(dilog_unit(Fraction(a, b)), 0.25) / (2.0 * math.sqrt(math.pi))
        amp, phase = polar(const)
        return AsymptoticProfile(
            b, COSINE, lam.real, lam.imag, amp, phase, -0.75, dominant=a, target=QN, regime=PSI1,
        )
    if name == PSI2:
        const = csqrt(1 - zeta) * cpow(dilog_unit(Fraction(2 * a, b)), 0.25) / (2.0 * math.sqrt(2.0 * math.pi))
        amp, phase = polar(const)
        return AsymptoticProfile(
            b, COSINE, lam.real, lam.imag, amp, phase, -0.75,
            dominant=a, target=QN, regime=PSI2, parity_turn=Fraction(1, 2),
        )
    const = cpow(dilog_unit(Fraction(3 * a, b)), 0.25) / (2.0 * math.sqrt(3.0 * math.pi))
    amp, phase = polar(const)
    # exact data pair zeta_3**(-n) with omega_{2,3} and zeta_3**(-2n) with omega_{1,3}
    w23, w13 = omega(2, 3, zeta), omega(1, 3, zeta)
    secondary = (
        OscillationTerm(*polar(w23), Fraction(2, 3)),
        OscillationTerm(*polar(w13), Fraction(1, 3)),
    )
    return AsymptoticProfile(
        b, OMEGA_PAIR, lam.real, lam.imag, amp, phase, -0.75,
        dominant=a, target=QN, regime=PSI3, secondary=secondary,
    )


def _is_exact(x) -> bool:
    return isinstance(x, (Rational, str)) and not isinstance(x, bool)


def _weights(v: Sequence, b: int) -> tuple[tuple, bool]:
    if len(v) != b:
        raise ValueError(f"weight vector has length {len(v)}, expected {b}")
    if all(_is_exact(x) for x in v):
        return tuple(Fraction(x) for x in v), True
    return tuple(float(x) for x in v), False


def _root_mask(weights: tuple, b: int, exact: bool) -> list[bool]:
    """mask[a] is True iff zeta_b**a is a zero of P_v, for 0 <= a <= b/2."""
    mask = []
    cache: dict[int, bool] = {}
    for a in range(b // 2 + 1):
        d = b // math.gcd(a, b)
        if exact:
            if d not in cache:
                cache[d] = is_cyclotomic_root(list(weights), d)
            mask.append(cache[d])
        else:
            mask.append(abs(poly_eval_root(weights, b, a)) < ROOT_TOL)
    return mask


def dominant_twist(weights: tuple, b: int, exact: bool) -> int:
    """a0: the non-root twist 0 <= a <= b/2 maximizing Re L(zeta_b**a)."""
    if not exact:
        log.warning("floating weights: zeros of P_v detected with tolerance %g", ROOT_TOL)
    mask = _root_mask(weights, b, exact)
    candidates = [a for a in range(b // 2 + 1) if not mask[a]]
    if not candidates:
        raise ValueError("every root of unity of order dividing b is a zero of the weight polynomial")
    scores = {a: L_at_root(a, b)[1].real for a in candidates}
    best = max(candidates, key=lambda a: scores[a])
    ties = [a for a in candidates if a != best and abs(scores[a] - scores[best]) < TIE_TOL]
    if ties:
        raise BoundaryError(f"dominant twist is not unique: {[best] + ties} share Re L = {scores[best]!r}")
    return best


def _combination_from_qn(q: AsymptoticProfile, scale: complex, weights: tuple, **extra) -> AsymptoticProfile:
    """(2/b) Re(P_v(zeta**-a0) Q_n(zeta**a0)) expressed as a real-valued profile."""
    amp, phase = polar(scale * cmath.rect(q.amplitude, q.phase))
    return dataclasses.replace(q, amplitude=amp, phase=phase, target=COMBINATION, weights=weights, **extra)


def generic_profile(v: Sequence, b: int) -> AsymptoticProfile:
    """Main term of sum_a v[a] p(a, b, n) for a nonzero weight vector v."""
    _check_modulus(b)
    weights, exact = _weights(v, b)
    if not any(weights):
        raise ValueError("weight vector must be nonzero")
    a0 = dominant_twist(weights, b, exact)
    if a0 == 0:
        coef = sum(weights) / b
        return dataclasses.replace(
            qn_profile(b, 0), amplitude=abs(float(coef)) / (4.0 * math.sqrt(3.0)),
            target=COMBINATION, coefficient=coef, weights=weights,
        )
    if 2 * a0 == b:
        coef = sum(w * (-1) ** a for a, w in enumerate(weights)) / b
        return dataclasses.replace(
            qn_profile(b, a0), amplitude=abs(float(coef)) / (2.0 * 24.0**0.25),
            target=COMBINATION, coefficient=coef, weights=weights,
        )
    p_at = poly_eval_root(weights, b, -a0)
    return _combination_from_qn(qn_profile(b, a0), 2.0 * p_at / b, weights)


def difference_profile(a1: int, a2: int, b: int) -> AsymptoticProfile:
    """Main term of p(a1, b, n) - p(a2, b, n)."""
    _check_modulus(b)
    if not (0 <= a1 < b and 0 <= a2 < b):
        raise ValueError(f"residues must lie in [0, {b}), got {a1}, {a2}")
    if a1 == a2:
        raise ValueError("residues must differ")
    weights = [Fraction(0)] * b
    weights[a1] += 1
    weights[a2] -= 1
    weights = tuple(weights)
    sign_diff = (-1) ** a1 - (-1) ** a2
    if b == 2:
        return dataclasses.replace(
            qn_profile(2, 1), amplitude=1.0 / (2.0 * 24.0**0.25),
            target=COMBINATION, coefficient=Fraction(sign_diff, 2), weights=weights,
        )
    if b == 3:
        const = (root_of_unity(3, -a1) - root_of_unity(3, -a2)) * gamma_third_constant()
        amp, phase = polar(const / (3.0 * (6.0 * math.pi) ** (2.0 / 3.0)))
        return AsymptoticProfile(
            3, ZETA3, LAMBDA_THIRD, 0.0, amp, phase, -2.0 / 3.0,
            dominant=1, regime=PSI3, parity_turn=Fraction(1, 3), weights=weights,
        )
    if b == 4 and sign_diff != 0:
        coef = Fraction(sign_diff, 4)
        return dataclasses.replace(
            qn_profile(4, 2), amplitude=abs(float(coef)) / (2.0 * 24.0**0.25),
            target=COMBINATION, coefficient=coef, weights=weights,
        )
    zeta = root_of_unity(b, 1)
    lam = csqrt(dilog_unit(Fraction(1, b)))
    const = (root_of_unity(b, -a1) - root_of_unity(b, -a2)) / b * csqrt((1 - zeta) * lam / math.pi)
    amp, phase = polar(const)
    return AsymptoticProfile(
        b, COSINE, lam.real, lam.imag, amp, phase, -0.75,
        dominant=1, regime=PSI1, weights=weights, d0=b,
    )


@dataclass(frozen=True)
class SetDifferenceSpec:
    """sum over S1 of p(a, b, n) minus sum over S2, for disjoint residue sets."""

    b: int
    S1: frozenset[int]
    S2: frozenset[int]

    def __init__(self, b: int, S1, S2):
        _check_modulus(b)
        s1, s2 = frozenset(int(a) for a in S1), frozenset(int(a) for a in S2)
        for a in s1 | s2:
            if not 0 <= a < b:
                raise ValueError(f"residue {a} outside [0, {b})")
        if s1 & s2:
            raise ValueError(f"sets must be disjoint, both contain {sorted(s1 & s2)}")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "S1", s1)
        object.__setattr__(self, "S2", s2)

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(1 if a in self.S1 else -1 if a in self.S2 else 0) for a in range(self.b))

    @property
    def polynomial(self) -> list[int]:
        return [int(w) for w in self.weights]

    def shifted(self, r: int) -> "SetDifferenceSpec":
        b = self.b
        return SetDifferenceSpec(b, {(a + r) % b for a in self.S1}, {(a + r) % b for a in self.S2})


def dominant_order(spec: SetDifferenceSpec) -> int:
    """d0: largest divisor d of b whose primitive d-th roots are not zeros of P_{S1,S2}."""
    poly = spec.polynomial
    for d in reversed(divisors(spec.b)):
        if not is_cyclotomic_root(poly, d):
            return d
    raise ValueError("weight polynomial vanishes at every b-th root of unity")


# labels for the four equal-size regimes, keyed by what dominates
PRIMITIVE_D0 = "primitive-d0"
MINUS_ONE_CLASSES = "minus-one-classes"
THIRD_ROOT = "third-root"
PARITY_CLASSES = "parity-classes"


def set_difference_case(spec: SetDifferenceSpec) -> str | None:
    """Which regime governs an equal-size set difference (None if sizes differ)."""
    if len(spec.S1) != len(spec.S2):
        return None
    d0 = dominant_order(spec)
    minus_one_root = spec.b % 2 == 0 and is_cyclotomic_root(spec.polynomial, 2)
    if d0 >= 5 or (d0 == 4 and minus_one_root):
        return PRIMITIVE_D0
    if (d0 == 4 or (d0 == 3 and spec.b % 2 == 0)) and not minus_one_root:
        return MINUS_ONE_CLASSES
    if d0 == 3:
        return THIRD_ROOT
    return PARITY_CLASSES


def _class(b: int, k: int, mod: int, upto: int | None = None) -> frozenset[int]:
    top = b - 1 if upto is None else upto
    return frozenset(a for a in range(top + 1) if a % mod == k % mod)


def matches_listed_pattern(spec: SetDifferenceSpec) -> bool | None:
    """Whether (S1, S2) has one of the explicitly listed shapes for its regime.

    Returns None for the primitive-d0 regime and unequal sizes, where no list
    exists.  The lists are checked literally; they are not claimed complete.
    """
    case = set_difference_case(spec)
    b, s1, s2 = spec.b, spec.S1, spec.S2
    if case is None or case == PRIMITIVE_D0:
        return None
    if case == PARITY_CLASSES:
        return any(s1 == _class(b, k, 2) and s2 == _class(b, k + 1, 2) for k in (0, 1))
    if case == MINUS_ONE_CLASSES:
        if dominant_order(spec) == 4:
            return any(
                s1 == _class(b, k1, 4) and s2 == _class(b, k2, 4)
                for k1 in range(4) for k2 in range(4) if (k1 + k2) % 2
            )
        return any(s1 == _class(b, k, 2) and s2 == _class(b, k + 1, 2) for k in (0, 1))
    if b % 2:
        return any(
            s1 == _class(b, k1, 3) and s2 == _class(b, k2, 3)
            for k1 in range(3) for k2 in range(3) if k1 != k2
        )
    listed = ((0, 3, 2, 5), (2, 5, 0, 3), (1, 4, 2, 5), (2, 5, 1, 4), (1, 3, 1, 4), (1, 4, 1, 3))
    return any(
        s1 == _class(b, k1, 6) | _class(b, k2, 6) and s2 == _class(b, k3, 6, b - 2) | _class(b, k4, 6, b - 2)
        for k1, k2, k3, k4 in listed
    )


_EXPECTED_TWIST = {
    MINUS_ONE_CLASSES: lambda b, d0: b // 2,
    PARITY_CLASSES: lambda b, d0: b // 2,
    THIRD_ROOT: lambda b, d0: b // 3,
    PRIMITIVE_D0: lambda b, d0: b // d0,
}


def set_difference_profile(spec: SetDifferenceSpec) -> AsymptoticProfile:
    """Main term of sum_{S1} p(a, b, n) - sum_{S2} p(a, b, n)."""
    b = spec.b
    weights = spec.weights
    if len(spec.S1) != len(spec.S2):
        coef = Fraction(len(spec.S1) - len(spec.S2), b)
        return dataclasses.replace(
            qn_profile(b, 0), amplitude=abs(float(coef)) / (4.0 * math.sqrt(3.0)),
            target=COMBINATION, coefficient=coef, weights=weights,
        )
    d0 = dominant_order(spec)
    case = set_difference_case(spec)
    profile = generic_profile(weights, b)
    expected = _EXPECTED_TWIST[case](b, d0)
    if profile.dominant != expected:
        raise RuntimeError(
            f"dominant twist {profile.dominant} disagrees with regime {case} (expected {expected})"
        )
    return dataclasses.replace(profile, d0=d0)


def shift_profile(profile: AsymptoticProfile, r: int) -> AsymptoticProfile:
    """Profile of the weights rotated by r residues: only the phase moves."""
    if profile.kind != COSINE or profile.target != COMBINATION:
        raise KindError(f"shift applies to real single-cosine profiles, not {profile.target}/{profile.kind}")
    b = profile.b
    phase = normalize_phase(profile.phase - TWO_PI * float(Fraction(profile.dominant * r, b) % 1))
    weights = None
    if profile.weights is not None:
        w = profile.weights
        weights = tuple(w[(a - r) % b] for a in range(b))
    return dataclasses.replace(profile, phase=phase, weights=weights)


def envelope(profile: AsymptoticProfile, n: int) -> float:
    """Non-oscillating size of the main term at n (exact base for the exact kinds)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if profile.kind in EXACT_KINDS:
        return float(abs(profile.exact_base(n)))
    return math.exp(profile.log_envelope(n))


def oscillation(profile: AsymptoticProfile, n: int) -> float:
    """Predicted value of (combination / envelope) at n; real profiles only."""
    if profile.target != COMBINATION:
        raise KindError("oscillation is defined for real combination profiles")
    if profile.kind in EXACT_KINDS:
        base = profile.exact_base(n)
        sign = (base > 0) - (base < 0)
        return float(profile.coefficient) * sign
    return profile.rotation(n).real


def evaluate_profile(profile: AsymptoticProfile, n: int) -> complex:
    """Predicted Q_n(zeta) (target "qn") or combination main term at n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if profile.kind in EXACT_KINDS:
        return complex(float(profile.coefficient * profile.exact_base(n)))
    if profile.target == QN:
        return cmath.exp(profile.log_envelope(n)) * profile.rotation(n)
    return complex(envelope(profile, n) * oscillation(profile, n), 0.0)


def predict_sign_changes(profile: AsymptoticProfile, n_max: int) -> list[int]:
    """Largest n before each zero of cos(phase + 2 lambda2 sqrt(n)), up to n_max.

    A zero at a non-integral n_c reports floor(n_c); an integral zero reports
    n_c - 1.  Indices below 1 are dropped.
    """
    if profile.kind != COSINE or profile.parity_turn is not None:
        raise KindError(f"sign-change prediction needs a plain cosine profile, not {profile.kind}")
    phi, lam2 = profile.phase, profile.lambda2
    if lam2 == 0:
        raise ValueError("lambda2 = 0: the main term does not oscillate")
    if lam2 < 0:
        phi, lam2 = -phi, -lam2
    out = []
    k = math.ceil((phi - math.pi / 2) / math.pi)
    while True:
        x = math.pi / 2 + k * math.pi - phi
        k += 1
        if x <= 0:
            continue
        n_c = (x / (2.0 * lam2)) ** 2
        if n_c > n_max:
            break
        idx = math.floor(n_c)
        if idx == n_c:
            idx -= 1
        if idx >= 1:
            out.append(idx)
    return out
