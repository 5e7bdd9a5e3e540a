"""Partitions of n counted by their number of parts modulo b.

Exact counts come from :mod:`partition_residues.exact_engine`; asymptotic main
terms from :mod:`partition_residues.asymptotics`; comparisons between the two
from :mod:`partition_residues.verification`.
"""

from .asymptotics import (
    AsymptoticProfile,
    OscillationTerm,
    SetDifferenceSpec,
    difference_profile,
    dominant_order,
    envelope,
    evaluate_profile,
    generic_profile,
    matches_listed_pattern,
    oscillation,
    predict_sign_changes,
    qn_profile,
    set_difference_case,
    set_difference_profile,
    shift_profile,
)
from .errors import (
    BoundaryError,
    BracketError,
    CapacityError,
    KindError,
    PartitionResidueError,
    SingularFactorError,
)
from .exact_engine import (
    CyclotomicInteger,
    PartCountTable,
    ResidueVector,
    build_table,
    distinct_odd_count,
    partition_number,
    qn_exact,
    residue_counts,
    weighted_combination,
)
from .special_functions import (
    CrossingPair,
    L_function,
    dilog_unit,
    find_crossings,
    omega,
    psi_k,
)
from .verification import (
    ComparisonRow,
    convergence_report,
    exact_sign_changes,
    overlay,
    qn_ratio,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticProfile",
    "BoundaryError",
    "BracketError",
    "CapacityError",
    "ComparisonRow",
    "CrossingPair",
    "CyclotomicInteger",
    "KindError",
    "L_function",
    "OscillationTerm",
    "PartCountTable",
    "PartitionResidueError",
    "ResidueVector",
    "SetDifferenceSpec",
    "SingularFactorError",
    "build_table",
    "convergence_report",
    "difference_profile",
    "dilog_unit",
    "distinct_odd_count",
    "dominant_order",
    "envelope",
    "evaluate_profile",
    "exact_sign_changes",
    "find_crossings",
    "generic_profile",
    "matches_listed_pattern",
    "omega",
    "oscillation",
    "overlay",
    "partition_number",
    "predict_sign_changes",
    "psi_k",
    "qn_exact",
    "qn_profile",
    "qn_ratio",
    "residue_counts",
    "set_difference_case",
    "set_difference_profile",
    "shift_profile",
    "weighted_combination",
]
