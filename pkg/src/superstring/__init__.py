"""Shortest common superstring via hierarchical graphs.

Solvers (greedy hierarchical construction, collapsing normal form, classic
greedy), exact oracles for small and special instances, and a fuzzing
harness for the collapsing equalities.
"""

from ._kernels import BACKEND
from .collapse import CollapseStep, ca, collapse_at, collapse_keeps_valid
from .datasets import DatasetError, format_dataset, load_dataset, parse_dataset, save_dataset
from .dot import render_graph, render_solution
from .fuzz import (
    CheckResult,
    FailureRecord,
    FuzzReport,
    GeneratorError,
    GeneratorSpec,
    check_collapsing,
    check_greedy_hierarchical,
    check_strong_collapsing,
    default_starts,
    generate,
    run_campaign,
)
from .greedy import GreedyResult, TieBreakPolicy, ga, verify_greedy_permutation
from .greedy_hier import gha, gha_cycle_cover
from .hgraph import HierarchicalGraph, build_graph
from .oracles import (
    TooLargeError,
    brute_optimal,
    brute_optimal_cycle_cover,
    spectrum,
    tough,
    two_scs_formula,
)
from .solutions import (
    ArcMultiset,
    InvalidSolutionError,
    Spelling,
    ValidityReport,
    disjoint_union,
    is_eulerian_solution,
    spell,
    zigzag,
)
from .strings import (
    InputSet,
    merge,
    overlap,
    overlap_len,
    permutation_length,
    pref1,
    pref_pair,
    reduce_substring_free,
    suff1,
    suff_pair,
)

__version__ = "0.1.0"

__all__ = [
    "ArcMultiset", "BACKEND", "CheckResult", "CollapseStep", "DatasetError",
    "FailureRecord", "FuzzReport", "GeneratorError", "GeneratorSpec",
    "GreedyResult", "HierarchicalGraph", "InputSet", "InvalidSolutionError",
    "Spelling", "TieBreakPolicy", "TooLargeError", "ValidityReport",
    "brute_optimal", "brute_optimal_cycle_cover", "build_graph", "ca",
    "check_collapsing", "check_greedy_hierarchical", "check_strong_collapsing",
    "collapse_at", "collapse_keeps_valid", "default_starts", "disjoint_union",
    "format_dataset", "ga", "generate", "gha", "gha_cycle_cover",
    "is_eulerian_solution", "load_dataset", "merge", "overlap", "overlap_len",
    "parse_dataset", "permutation_length", "pref1", "pref_pair",
    "reduce_substring_free", "render_graph", "render_solution", "run_campaign",
    "save_dataset", "spectrum", "spell", "suff1", "suff_pair", "tough",
    "two_scs_formula", "verify_greedy_permutation", "zigzag",
]
