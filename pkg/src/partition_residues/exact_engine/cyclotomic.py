"""Exact arithmetic with roots of unity.

Polynomials are coefficient lists, lowest degree first.  Coefficients may be
``int`` or :class:`fractions.Fraction`; division is only ever by monic integer
polynomials, so both stay exact.
"""

from __future__ import annotations

import cmath
import decimal
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


def divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _trim(poly: list) -> list:
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def poly_mul(p: Sequence, q: Sequence) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, c in enumerate(q):
            out[i + j] += a * c
    return _trim(out)


def poly_divmod_monic(num: Sequence, den: Sequence) -> tuple[list, list]:
    """Quotient and remainder of num by a monic polynomial den."""
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dd = len(den) - 1
    if len(rem) <= dd:
        return [0], _trim(rem or [0])
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            quot[k - dd] = c
            for i in range(dd + 1):
                rem[k - dd + i] -= c * den[i]
    return _trim(quot), _trim(rem[:dd] or [0])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num, rem = poly_divmod_monic(num, cyclotomic_polynomial(d))
        assert rem == [0]
    return tuple(num)


def is_cyclotomic_root(poly: Sequence, d: int) -> bool:
    """True iff the primitive d-th roots of unity are zeros of poly (exact test)."""
    _, rem = poly_divmod_monic(list(poly), cyclotomic_polynomial(d))
    return all(c == 0 for c in rem)


def root_of_unity(b: int, k: int = 1) -> complex:
    """exp(2 pi i k / b), with k reduced mod b first so large k stays accurate."""
    k %= b
    if 4 * k == b:
        return 1j
    if 2 * k == b:
        return -1 + 0j
    if 4 * k == 3 * b:
        return -1j
    return cmath.exp(2j * math.pi * k / b)


def poly_eval_root(poly: Sequence, b: int, k: int = 1) -> complex:
    """Evaluate poly at exp(2 pi i k / b) with exponent reduction mod b."""
    re = math.fsum(float(c) * root_of_unity(b, k * a).real for a, c in enumerate(poly))
    im = math.fsum(float(c) * root_of_unity(b, k * a).imag for a, c in enumerate(poly))
    return complex(re, im)


GUARD_DIGITS = 25


def _decimal_pi() -> decimal.Decimal:
    """pi at the current context precision (recipe from the decimal docs)."""
    with decimal.localcontext() as ctx:
        ctx.prec += 2
        three = decimal.Decimal(3)
        lasts, t, s, n, na, d, da = 0, three, 3, 1, 0, 0, 24
        while s != lasts:
            lasts = s
            n, na = n + na, na + 8
            d, da = d + da, da + 32
            t = (t * n) / d
            s += t
    return +s


def _decimal_cos_sin(x: decimal.Decimal) -> tuple[decimal.Decimal, decimal.Decimal]:
    """Taylor series for cos and sin; intended for |x| <= pi."""
    with decimal.localcontext() as ctx:
        ctx.prec += 2
        cos_sum = sin_sum = decimal.Decimal(0)
        term = decimal.Decimal(1)
        k = 0
        while True:
            new_cos = cos_sum + term
            term *= x / (k + 1)
            new_sin = sin_sum + term
            term *= -x / (k + 2)
            k += 2
            if new_cos == cos_sum and new_sin == sin_sum:
                break
            cos_sum, sin_sum = new_cos, new_sin
    return +cos_sum, +sin_sum


def poly_eval_root_precise(poly: Sequence[int], b: int, k: int = 1) -> complex:
    """Evaluate an integer polynomial at exp(2 pi i k / b) without cancellation loss.

    The working precision grows with the coefficient size, so the result is
    accurate relative to its own modulus rather than to the coefficients.
    """
    big = max((abs(int(c)) for c in poly), default=0)
    if big < 2**40:
        return poly_eval_root(poly, b, k)
    with decimal.localcontext() as ctx:
        ctx.prec = len(str(big)) + GUARD_DIGITS
        two_pi = 2 * _decimal_pi()
        re = im = decimal.Decimal(0)
        for a, c in enumerate(poly):
            if not c:
                continue
            r = (k * a) % b
            if 2 * r > b:
                r -= b
            cos_v, sin_v = _decimal_cos_sin(two_pi * r / b)
            re += int(c) * cos_v
            im += int(c) * sin_v
        return complex(float(re), float(im))


@dataclass(frozen=True)
class CyclotomicInteger:
    """Element sum_a coeffs[a] * zeta_b**a of Z[x]/(x**b - 1).

    The representative is not canonical; :meth:`reduced` gives the canonical
    form modulo the b-th cyclotomic polynomial, which is what equality of
    values at zeta_b means.
    """

    b: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.b < 1:
            raise ValueError(f"modulus must be positive, got {self.b}")
        if len(self.coeffs) != self.b:
            raise ValueError(f"expected {self.b} coefficients, got {len(self.coeffs)}")

    @classmethod
    def monomial(cls, b: int, exponent: int, coeff: int = 1) -> "CyclotomicInteger":
        coeffs = [0] * b
        coeffs[exponent % b] = coeff
        return cls(b, tuple(coeffs))

    @classmethod
    def from_int(cls, b: int, value: int) -> "CyclotomicInteger":
        return cls.monomial(b, 0, value)

    def _same_ring(self, other: "CyclotomicInteger") -> None:
        if other.b != self.b:
            raise ValueError(f"modulus mismatch: {self.b} vs {other.b}")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(self.b, other)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        self._same_ring(other)
        return CyclotomicInteger(self.b, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.b, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.b, tuple(other * x for x in self.coeffs))
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        self._same_ring(other)
        b = self.b
        out = [0] * b
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[(i + j) % b] += x * y
        return CyclotomicInteger(b, tuple(out))

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicInteger":
        """Complex conjugate: exponent a goes to -a mod b."""
        b = self.b
        return CyclotomicInteger(b, tuple(self.coeffs[(-a) % b] for a in range(b)))

    def reduced(self) -> tuple[int, ...]:
        """Canonical coordinates in the power basis 1, zeta, ..., zeta**(phi(b)-1)."""
        _, rem = poly_divmod_monic(list(self.coeffs), cyclotomic_polynomial(self.b))
        deg = len(cyclotomic_polynomial(self.b)) - 1
        return tuple(rem) + (0,) * (deg - len(rem))

    def equals_value(self, other: "CyclotomicInteger") -> bool:
        """Exact equality of the values at zeta_b."""
        self._same_ring(other)
        return self.reduced() == other.reduced()

    def is_rational_integer(self) -> bool:
        red = self.reduced()
        return all(c == 0 for c in red[1:])

    def evaluate(self) -> complex:
        """Numerical value at zeta_b = exp(2 pi i / b).

        Reduces modulo the cyclotomic polynomial first: the raw coefficients
        can be as large as p(n) while the value is exponentially smaller, so
        large coordinates are summed in extended decimal precision.
        """
        return poly_eval_root_precise(self.reduced(), self.b, 1)
