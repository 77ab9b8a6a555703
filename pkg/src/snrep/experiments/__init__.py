"""Experiment harness: exact constant tables, identity suites at scale,
and seeded statistical probes of the limit laws."""

from .stats import hermite
from .runs import (
    adjacent_transposition_mv_check,
    clt_characters,
    clt_total_sum,
    conjecture_probe,
    cotransition_semicircle,
    identity_suite,
    main_term_experiment,
    mv_table,
    partial_sum_lln,
)

__all__ = [
    "adjacent_transposition_mv_check",
    "clt_characters",
    "clt_total_sum",
    "conjecture_probe",
    "cotransition_semicircle",
    "hermite",
    "identity_suite",
    "main_term_experiment",
    "mv_table",
    "partial_sum_lln",
]
