"""Triangular table of partition counts by number of parts."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from ..errors import CapacityError
from .cyclotomic import CyclotomicInteger

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 2000


@dataclass(frozen=True)
class PartCountTable:
    """counts(n, m) = number of partitions of n into exactly m parts, 0 <= m <= n <= n_max.

    ``rows[n][m]`` holds counts(n, m).  Row 0 is ``(1,)`` for the empty
    partition.  Instances are immutable and safe to share between threads.
    """

    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def count(self, n: int, m: int) -> int:
        self._check_n(n)
        if m < 0 or m > n:
            return 0
        return self.rows[n][m]

    def row(self, n: int) -> tuple[int, ...]:
        self._check_n(n)
        return self.rows[n]

    def p(self, n: int) -> int:
        """p(n) as the row sum."""
        return sum(self.row(n))

    def _check_n(self, n: int) -> None:
        if not 0 <= n <= self.n_max:
            raise IndexError(f"n={n} outside table range [0, {self.n_max}]")


def build_table(n_max: int, budget: int = DEFAULT_BUDGET) -> PartCountTable:
    """Build counts(n, m) for all 0 <= m <= n <= n_max.

    Uses counts(n, m) = counts(n-1, m-1) + counts(n-m, m): either some part
    equals 1 (remove it) or all parts exceed 1 (subtract 1 from each).

    Raises CapacityError when n_max exceeds ``budget``; the default budget of
    2000 rows is about two million big integers.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if n_max > budget:
        raise CapacityError(f"n_max={n_max} exceeds the table budget of {budget} rows")
    rows: list[list[int]] = [[1]]
    for n in range(1, n_max + 1):
        row = [0] * (n + 1)
        prev = rows[n - 1]
        for m in range(1, n + 1):
            c = prev[m - 1]
            if 2 * m <= n:
                c += rows[n - m][m]
            row[m] = c
        rows.append(row)
    log.debug("built partition table up to n=%d", n_max)
    return PartCountTable(n_max, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class ResidueVector:
    """entries[a] = p(a, b, n), partitions of n with number of parts = a (mod b)."""

    b: int
    n: int
    entries: tuple[int, ...]

    def __getitem__(self, a: int) -> int:
        return self.entries[a % self.b]

    def total(self) -> int:
        return sum(self.entries)


def residue_counts(table: PartCountTable, b: int, n: int) -> ResidueVector:
    if b < 2:
        raise ValueError(f"modulus must be at least 2, got {b}")
    row = table.row(n)
    entries = [0] * b
    for m, c in enumerate(row):
        entries[m % b] += c
    return ResidueVector(b, n, tuple(entries))


def qn_exact(table: PartCountTable, b: int, j: int, n: int) -> CyclotomicInteger:
    """Q_n(zeta_b**j) = sum_a p(a, b, n) zeta_b**(j*a) as an exact cyclotomic integer."""
    if not 0 <= j < b:
        raise ValueError(f"twist index j must lie in [0, {b}), got {j}")
    res = residue_counts(table, b, n)
    coeffs = [0] * b
    for a, c in enumerate(res.entries):
        coeffs[(j * a) % b] += c
    return CyclotomicInteger(b, tuple(coeffs))


def as_exact_weights(v: Sequence) -> tuple[Fraction, ...]:
    """Convert weights to Fractions; floats convert exactly to their binary value."""
    out = []
    for x in v:
        if isinstance(x, (Rational, float, str)):
            out.append(Fraction(x))
        else:
            raise TypeError(f"unsupported weight type {type(x).__name__}")
    return tuple(out)


def weighted_combination(v: Sequence, b: int, n: int, table: PartCountTable) -> Fraction:
    """sum_a v[a] * p(a, b, n) as an exact rational."""
    if len(v) != b:
        raise ValueError(f"weight vector has length {len(v)}, expected {b}")
    weights = as_exact_weights(v)
    res = residue_counts(table, b, n)
    return sum((w * c for w, c in zip(weights, res.entries) if w), Fraction(0))
