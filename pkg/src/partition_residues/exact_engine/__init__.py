"""Exact partition counts by number of parts and twisted generating-function coefficients."""

from .cyclotomic import (
    CyclotomicInteger,
    cyclotomic_polynomial,
    divisors,
    is_cyclotomic_root,
    poly_eval_root,
    root_of_unity,
)
from .oracles import (
    brute_force_qn,
    distinct_odd_count,
    distinct_odd_counts,
    iter_partitions,
    partition_number,
    partition_numbers,
)
from .table import (
    DEFAULT_BUDGET,
    PartCountTable,
    ResidueVector,
    as_exact_weights,
    build_table,
    qn_exact,
    residue_counts,
    weighted_combination,
)

__all__ = [
    "CyclotomicInteger",
    "DEFAULT_BUDGET",
    "PartCountTable",
    "ResidueVector",
    "as_exact_weights",
    "brute_force_qn",
    "build_table",
    "cyclotomic_polynomial",
    "distinct_odd_count",
    "distinct_odd_counts",
    "divisors",
    "is_cyclotomic_root",
    "iter_partitions",
    "partition_number",
    "partition_numbers",
    "poly_eval_root",
    "qn_exact",
    "residue_counts",
    "root_of_unity",
    "weighted_combination",
]
