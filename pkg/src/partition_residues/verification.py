"""Compare exact counts against main-term predictions."""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Iterable, Sequence

from .asymptotics import COMBINATION, EXACT_KINDS, QN, AsymptoticProfile, envelope, oscillation, qn_profile
from .errors import KindError
from .exact_engine import (
    PartCountTable,
    partition_number,
    qn_exact,
    residue_counts,
    weighted_combination,
)


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    exact: float
    envelope: float
    normalized: float
    predicted: float
    residual: float


def overlay(table: PartCountTable, profile: AsymptoticProfile, ns: Iterable[int]) -> list[ComparisonRow]:
    """exact / envelope next to the predicted oscillation, for each n."""
    if profile.target != COMBINATION or profile.weights is None:
        raise KindError("overlay needs a combination profile carrying its weights")
    rows = []
    for n in ns:
        if not 1 <= n <= table.n_max:
            raise ValueError(f"n={n} outside [1, {table.n_max}]")
        exact = weighted_combination(profile.weights, profile.b, n, table)
        env = envelope(profile, n)
        normalized = float(exact) / env if env else math.nan
        predicted = oscillation(profile, n)
        rows.append(ComparisonRow(n, float(exact), env, normalized, predicted, normalized - predicted))
    return rows


def qn_ratio(table: PartCountTable, b: int, a: int, n: int) -> float:
    """|Q_n(zeta_b**a)| divided by the modulus of its predicted main term."""
    profile = qn_profile(b, a)
    if profile.target != QN:
        raise KindError("expected a Q_n profile")
    a %= b
    exact = qn_exact(table, b, a, n).evaluate() if a else complex(table.p(n))
    if profile.kind in EXACT_KINDS:
        return abs(exact) / abs(profile.exact_base(n))
    return abs(exact) / math.exp(profile.log_envelope(n))


def exact_sign_changes(values: Sequence, start: int = 1) -> list[int]:
    """Indices n with sign(n) != sign(n+1); values[i] belongs to n = start + i.

    A zero takes the sign of the nearest nonzero value before it (leading
    zeros take the first nonzero sign), so a run through zero counts once.
    """
    signs = []
    current = 0
    for v in values:
        if v > 0:
            current = 1
        elif v < 0:
            current = -1
        signs.append(current)
    first = next((s for s in signs if s), 0)
    if first == 0:
        raise ValueError("sequence is identically zero")
    signs = [s or first for s in signs]
    return [start + i for i in range(len(signs) - 1) if signs[i] != signs[i + 1]]


def sign_change_sequence(table: PartCountTable, weights: Sequence, b: int, n_max: int, start: int = 1) -> list[int]:
    """Exact sign changes of sum_a weights[a] p(a, b, n) for start <= n <= n_max."""
    values = [weighted_combination(weights, b, n, table) for n in range(start, n_max + 1)]
    return exact_sign_changes(values, start)


@dataclass(frozen=True)
class WindowSummary:
    lo: int
    hi: int
    count: int
    max_abs_residual: float
    median_abs_residual: float


def convergence_report(rows: Sequence[ComparisonRow], boundaries: Sequence[int] | None = None) -> list[WindowSummary]:
    """max and median |residual| per window [lo, hi); dyadic windows by default."""
    if not rows:
        raise ValueError("no rows to summarize")
    ns = [r.n for r in rows]
    if boundaries is None:
        lo = 2 ** max(0, math.floor(math.log2(min(ns))))
        boundaries = [lo]
        while boundaries[-1] <= max(ns):
            boundaries.append(2 * boundaries[-1])
    out = []
    for lo, hi in zip(boundaries, boundaries[1:]):
        res = [abs(r.residual) for r in rows if lo <= r.n < hi]
        if res:
            out.append(WindowSummary(lo, hi, len(res), max(res), statistics.median(res)))
    if len(out) < 2:
        raise ValueError("need at least two nonempty windows")
    return out


def check_oracle_chain(table: PartCountTable, moduli: Iterable[int], n_max: int | None = None) -> list[str]:
    """Pentagonal p(n) = table row sum = residue total, for each modulus.

    Returns a list of mismatch descriptions (empty when all agree).
    """
    top = table.n_max if n_max is None else min(n_max, table.n_max)
    moduli = list(moduli)
    problems = []
    for n in range(top + 1):
        p = partition_number(n)
        if table.p(n) != p:
            problems.append(f"n={n}: row sum {table.p(n)} != {p}")
        for b in moduli:
            total = residue_counts(table, b, n).total()
            if total != p:
                problems.append(f"n={n}, b={b}: residue total {total} != {p}")
    return problems
