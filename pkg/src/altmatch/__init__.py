"""Alternating Hamilton paths and cycles relative to a perfect matching."""

from .alternating import (
    CLOSED_PATH,
    CYCLE,
    OPEN_PATH,
    AlternatingWalk,
    InvalidWalk,
    NotApplicable,
    SearchBudgetExceeded,
    alt_reachable_pairs,
    find_alt_hamilton_cycle,
    find_closed_alt_hamilton_path,
    iter_alt_cycles,
    longest_alt_cycle,
    longest_closed_alt_path,
)
from .constructor import BuildResult, ImprovementStep, build_alt_hamilton_path, replay_trace
from .extendability import extendability_profile, is_k_extendable, max_extendability_k
from .families import gen_g1, gen_remark_tight, parse_family, recognize_g1
from .formats import decode_graph6, encode_graph6, parse_edge_list, read_edge_list
from .graph import Graph, bipartition, is_connected, vertex_connectivity
from .harness import SweepConfig, run_sweep
from .matching import Matching, enum_k_matchings, enum_perfect_matchings, max_matching
from .report import TheoremReport
from .theorems import (
    check_corollary43,
    check_lemma13,
    check_lemma14,
    check_lemma41,
    check_thm21,
    check_thm31,
    check_thm42,
    probe_lovasz_woodall,
)

__version__ = "0.1.0"

__all__ = [
    "AlternatingWalk",
    "BuildResult",
    "CLOSED_PATH",
    "CYCLE",
    "Graph",
    "ImprovementStep",
    "InvalidWalk",
    "Matching",
    "NotApplicable",
    "OPEN_PATH",
    "SearchBudgetExceeded",
    "SweepConfig",
    "TheoremReport",
    "alt_reachable_pairs",
    "bipartition",
    "build_alt_hamilton_path",
    "check_corollary43",
    "check_lemma13",
    "check_lemma14",
    "check_lemma41",
    "check_thm21",
    "check_thm31",
    "check_thm42",
    "decode_graph6",
    "encode_graph6",
    "enum_k_matchings",
    "enum_perfect_matchings",
    "extendability_profile",
    "find_alt_hamilton_cycle",
    "find_closed_alt_hamilton_path",
    "gen_g1",
    "gen_remark_tight",
    "is_connected",
    "is_k_extendable",
    "iter_alt_cycles",
    "longest_alt_cycle",
    "longest_closed_alt_path",
    "max_extendability_k",
    "max_matching",
    "parse_edge_list",
    "parse_family",
    "probe_lovasz_woodall",
    "read_edge_list",
    "recognize_g1",
    "replay_trace",
    "run_sweep",
    "vertex_connectivity",
]
