"""Failure enumeration, coset decomposition and bound verification."""

from .bounds import (
    BoundRecord,
    box_size,
    coset_capacity,
    count_irreducible,
    omega_bruteforce,
    omega_h,
    phi,
    structured_vector,
)
from .cosets import CosetDecomposition, CosetTable, count_cosets_of_size, cyclotomic_cosets, decompose
from .failure import FailureStats, epsilon, eta, evaluation_table, indicator_H, transcript_failure_fraction
from .lemmas import (
    CHECKS,
    SUITES,
    CheckRecord,
    RootReport,
    exploratory_root_search,
    in_class_P,
    lemma_root_check,
    run_suite,
    verify_bounds,
)

__all__ = [
    "BoundRecord",
    "box_size",
    "coset_capacity",
    "count_irreducible",
    "omega_bruteforce",
    "omega_h",
    "phi",
    "structured_vector",
    "CosetDecomposition",
    "CosetTable",
    "count_cosets_of_size",
    "cyclotomic_cosets",
    "decompose",
    "FailureStats",
    "epsilon",
    "eta",
    "evaluation_table",
    "indicator_H",
    "transcript_failure_fraction",
    "CHECKS",
    "SUITES",
    "CheckRecord",
    "RootReport",
    "exploratory_root_search",
    "in_class_P",
    "lemma_root_check",
    "run_suite",
    "verify_bounds",
]
