"""Dilogarithm on the unit circle and the constants built from it.

All angles are in radians except :func:`dilog_unit`, which takes the fraction
of a full turn.  Complex values are plain Python ``complex`` with principal
branches throughout (arguments in (-pi, pi]).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Real

from scipy.optimize import brentq

from .errors import BoundaryError, BracketError, SingularFactorError
from .exact_engine.cyclotomic import root_of_unity

TWO_PI = 2.0 * math.pi

# regimes of the maximal Psi_k curve, named by k
PSI1, PSI3, PSI2 = "psi1", "psi3", "psi2"

BOUNDARY_TOL = 1e-12
CROSSING_XTOL = 1e-14


def _bernoulli_even(count: int) -> list[Fraction]:
    """B_2, B_4, ..., B_{2*count} as exact fractions."""
    size = 2 * count + 1
    B = [Fraction(0)] * size
    B[0] = Fraction(1)
    for m in range(1, size):
        acc = Fraction(0)
        binom = 1
        for k in range(m):
            acc += binom * B[k]
            binom = binom * (m + 1 - k) // (k + 1)
        B[m] = -acc / (m + 1)
    return [B[2 * k] for k in range(1, count + 1)]


# Cl2(t) = t - t log|t| + sum_k |B_2k| t^(2k+1) / (2k (2k+1) (2k)!), |t| < 2 pi
_CLAUSEN_COEFFS = tuple(
    float(abs(b2k) / (2 * k * (2 * k + 1) * math.factorial(2 * k)))
    for k, b2k in enumerate(_bernoulli_even(40), start=1)
)


def clausen2(t: float) -> float:
    """Clausen function Cl2(t) = sum_n sin(n t) / n**2."""
    t = math.remainder(t, TWO_PI)
    if t == 0.0 or abs(t) == math.pi:
        return 0.0
    t2 = t * t
    power = t * t2
    total = 0.0
    for c in _CLAUSEN_COEFFS:
        term = c * power
        total += term
        if abs(term) < 1e-18:
            break
        power *= t2
    return t - t * math.log(abs(t)) + total


def dilog_unit(theta: Real) -> complex:
    """Li2(exp(2 pi i theta)) for real theta, reduced mod 1.

    The real part is the closed form pi**2 (theta**2 - theta + 1/6) on [0, 1);
    the imaginary part is the Clausen function.
    """
    x = theta % 1
    if isinstance(x, Fraction):
        bern2 = float(x * x - x + Fraction(1, 6))
    else:
        bern2 = x * x - x + 1.0 / 6.0
    return complex(math.pi**2 * bern2, clausen2(TWO_PI * float(x)))


def csqrt(z: complex) -> complex:
    """Principal square root; a signed-zero imaginary part is treated as +0."""
    z = complex(z)
    return cmath.sqrt(complex(z.real, z.imag + 0.0))


def cpow(z: complex, w: complex) -> complex:
    """Principal power z**w = exp(w Log z)."""
    z = complex(z)
    if z == 0:
        if w == 0:
            return 1 + 0j
        if complex(w).real > 0:
            return 0j
        raise ZeroDivisionError("0 raised to a power with nonpositive real part")
    return cmath.exp(w * cmath.log(complex(z.real, z.imag + 0.0)))


def sqrt_dilog(theta: Real) -> complex:
    """Principal sqrt of Li2(exp(2 pi i theta))."""
    return csqrt(dilog_unit(theta))


def psi_k(theta: float, k: int) -> float:
    """Re sqrt(Li2(exp(i k theta))) / k, theta in radians."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return sqrt_dilog(k * theta / TWO_PI).real / k


@dataclass(frozen=True)
class CrossingPair:
    theta13: float
    theta23: float

    def __post_init__(self):
        if not 0 < self.theta13 < TWO_PI / 3 < self.theta23 < math.pi:
            raise ValueError(f"crossings out of order: {self.theta13}, {self.theta23}")


def _bracketed_root(f, lo: float, hi: float, label: str) -> float:
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketError(f"{label}: no sign change on [{lo}, {hi}] ({flo:.3g}, {fhi:.3g})")
    return brentq(f, lo, hi, xtol=CROSSING_XTOL, rtol=4 * 2.220446049250313e-16, maxiter=200)


@lru_cache(maxsize=1)
def find_crossings() -> CrossingPair:
    """Angles where Psi_1 = Psi_3 (below 2 pi/3) and Psi_2 = Psi_3 (above 2 pi/3)."""
    t13 = _bracketed_root(lambda t: psi_k(t, 1) - psi_k(t, 3), 1.8, TWO_PI / 3, "Psi1-Psi3")
    t23 = _bracketed_root(lambda t: psi_k(t, 2) - psi_k(t, 3), TWO_PI / 3, 2.9, "Psi2-Psi3")
    return CrossingPair(t13, t23)


def regime(theta: float) -> str:
    """Which Psi curve is maximal at theta in [0, pi]."""
    if not -BOUNDARY_TOL <= theta <= math.pi + BOUNDARY_TOL:
        raise ValueError(f"theta={theta} outside [0, pi]")
    cr = find_crossings()
    for edge in (cr.theta13, cr.theta23):
        if abs(theta - edge) < BOUNDARY_TOL:
            raise BoundaryError(f"theta={theta!r} is on the crossing {edge!r}")
    if theta < cr.theta13:
        return PSI1
    if theta < cr.theta23:
        return PSI3
    return PSI2


_REGIME_K = {PSI1: 1, PSI2: 2, PSI3: 3}


def L_function(theta: float) -> complex:
    """Piecewise sqrt(Li2(e^{i k theta})) / k with k picked by :func:`regime`."""
    k = _REGIME_K[regime(theta)]
    return sqrt_dilog(k * theta / TWO_PI) / k


def L_at_root(a: int, b: int) -> tuple[str, complex]:
    """Regime and L value at zeta_b**a, 0 <= a <= b/2, with exact angle reduction."""
    if not 0 <= 2 * a <= b:
        raise ValueError(f"need 0 <= a <= b/2, got a={a}, b={b}")
    frac = Fraction(a, b)
    name = regime(TWO_PI * float(frac))
    if 3 * a == b:
        name = PSI3
    elif 2 * a == b:
        name = PSI2
    k = _REGIME_K[name]
    return name, sqrt_dilog(k * frac) / k


def omega(h: int, k: int, z: complex) -> complex:
    """prod_{j=1..k} (1 - z zeta_k**(-j h)) ** (j/k - 1/2), principal powers."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    out = 1 + 0j
    for j in range(1, k + 1):
        expo = Fraction(j, k) - Fraction(1, 2)
        base = 1 - complex(z) * root_of_unity(k, -j * h)
        if abs(base) < 1e-14:
            if expo < 0:
                raise SingularFactorError(f"omega_{{{h},{k}}}: factor j={j} vanishes", j)
            if expo > 0:
                return 0j
            continue
        out *= cpow(base, float(expo))
    return out


def gamma_third_constant() -> complex:
    """(1 - zeta_3**2)**(1/6) (1 - zeta_3)**(1/2) Gamma(1/3)."""
    z3 = root_of_unity(3, 1)
    return cpow(1 - z3 * z3, 1.0 / 6.0) * csqrt(1 - z3) * math.gamma(1.0 / 3.0)
