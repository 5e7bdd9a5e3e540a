"""Independent integer-partition oracles.

Nothing here touches :mod:`partition_residues.exact_engine.table`; these
routines exist to cross-check it.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator

BRUTE_FORCE_LIMIT = 50


@lru_cache(maxsize=None)
def _pentagonal_values(n_max: int) -> tuple[int, ...]:
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            g2 = g1 + k
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return tuple(p)


def partition_number(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    # round up so repeated calls with nearby n share one cached sweep
    cap = max(64, 1 << (n.bit_length()))
    return _pentagonal_values(cap)[n]


def partition_numbers(n_max: int) -> tuple[int, ...]:
    """p(0), ..., p(n_max) by the pentagonal recurrence."""
    cap = max(64, 1 << (n_max.bit_length()))
    return _pentagonal_values(cap)[: n_max + 1]


def distinct_odd_count(n: int) -> int:
    """Number of partitions of n into distinct odd parts (0/1 knapsack over odd parts)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return distinct_odd_counts(n)[n]


@lru_cache(maxsize=8)
def _distinct_odd_counts(cap: int) -> tuple[int, ...]:
    ways = [1] + [0] * cap
    for part in range(1, cap + 1, 2):
        for total in range(cap, part - 1, -1):
            ways[total] += ways[total - part]
    return tuple(ways)


def distinct_odd_counts(n_max: int) -> tuple[int, ...]:
    cap = max(64, 1 << (n_max.bit_length()))
    return _distinct_odd_counts(cap)[: n_max + 1]


def iter_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield the partitions of n as weakly decreasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in iter_partitions(n - first, first):
            yield (first,) + rest


def length_histogram(n: int) -> Counter:
    """Counter mapping number of parts -> number of partitions of n, by enumeration."""
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"enumeration guard: n={n} exceeds {BRUTE_FORCE_LIMIT}")
    return Counter(len(lam) for lam in iter_partitions(n))


def brute_force_qn(n: int, zeta: complex) -> complex:
    """Sum of zeta**len(lam) over all partitions lam of n, by explicit enumeration.

    Only for small n (at most 50); the enumeration is exponential.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    hist = length_histogram(n)
    return complex(sum(count * complex(zeta) ** length for length, count in sorted(hist.items())))
