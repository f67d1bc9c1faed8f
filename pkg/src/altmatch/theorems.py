"""Statement-level checkers: hypothesis on one side, exact search on the other."""

from __future__ import annotations

import math
from typing import Callable, Optional, Sequence

from .alternating import (
    DEFAULT_BUDGET,
    iter_alt_cycles,
    iter_closed_alt_paths,
    validate_lemma13,
    validate_lemma14,
    SearchBudgetExceeded,
    alt_reachable_pairs,
    find_alt_hamilton_cycle,
    find_closed_alt_hamilton_path,
    longest_alt_cycle,
)
from .extendability import check_theorem_1_1, check_theorem_1_2, is_k_extendable, max_extendability_k
from .families import recognize_g1
from .graph import Graph, bipartition, is_connected, vertex_connectivity
from .matching import Matching, require_perfect
from .report import TheoremReport, instance_from_reproduction, reproduction_data

G1_JOINTING = "G1-jointing"


def _skip(theorem_id: str, repro: dict, reason: str, **diag) -> TheoremReport:
    return TheoremReport(theorem_id, hypothesis_met=False, conclusion_holds=None,
                         diagnostics={"skipped": reason, **diag}, reproduction=repro)


def _search(report: TheoremReport, finder: Callable, g: Graph, m: Matching, budget: int) -> None:
    """Run ``finder`` and store the outcome on ``report``."""
    try:
        walk = finder(g, m, budget=budget)
    except SearchBudgetExceeded:
        report.budget_exceeded = True
        report.conclusion_holds = None
        return
    report.witness = walk
    report.conclusion_holds = walk is not None


def min_cross_degree_sum(g: Graph) -> Optional[int]:
    """Minimum of d(x) + d(y) over x, y in different parts, or None if not bipartite."""
    bip = bipartition(g)
    if bip is None or not bip.part_a or not bip.part_b:
        return None
    return min(g.degree(x) for x in bip.part_a) + min(g.degree(y) for y in bip.part_b)


def check_thm21(g: Graph, m: Matching, *, search: bool = True, budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """Bipartite graphs with cross degree sums >= n/2 + 2 have an alternating Hamilton cycle."""
    require_perfect(g, m)
    repro = reproduction_data(g, m)
    if not is_connected(g):
        return _skip("thm21", repro, "disconnected")
    if g.n < 4:
        return _skip("thm21", repro, "alternating Hamilton cycle not applicable for n < 4")
    cross = min_cross_degree_sum(g)
    threshold = g.n / 2 + 2
    report = TheoremReport("thm21", hypothesis_met=cross is not None and cross >= threshold,
                           conclusion_holds=None, reproduction=repro,
                           diagnostics={"bipartite": cross is not None, "min_cross_degree_sum": cross,
                                        "threshold": threshold})
    if report.hypothesis_met or search:
        _search(report, find_alt_hamilton_cycle, g, m, budget)
    return report


def check_thm31(g: Graph, m: Matching, *, search: bool = True, budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """Degree sums >= n - 1 on alternating-reachable pairs give a closed Hamilton path."""
    require_perfect(g, m)
    repro = reproduction_data(g, m)
    if not is_connected(g):
        return _skip("thm31", repro, "disconnected")
    report = TheoremReport("thm31", hypothesis_met=False, conclusion_holds=None, reproduction=repro)
    try:
        pairs = alt_reachable_pairs(g, m, budget=budget)
    except SearchBudgetExceeded:
        report.budget_exceeded = True
        report.diagnostics["skipped"] = "budget exhausted computing reachable pairs"
        return report
    low = min(g.degree(x) + g.degree(y) for x, y in pairs)
    report.hypothesis_met = low >= g.n - 1
    report.diagnostics.update({"min_pair_degree_sum": low, "threshold": g.n - 1,
                               "reachable_pairs": len(pairs)})
    if report.hypothesis_met or search:
        _search(report, find_closed_alt_hamilton_path, g, m, budget)
    return report


def check_lemma41(g: Graph, m: Matching, *, search: bool = True, budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """Connectivity >= n/2 forces an alternating cycle of length >= n/2 + 1.

    Cycle lengths are even; the bound is compared literally.
    """
    require_perfect(g, m)
    repro = reproduction_data(g, m)
    if not is_connected(g):
        return _skip("lemma41", repro, "disconnected")
    if g.n < 4:
        return _skip("lemma41", repro, "no alternating cycles exist for n < 4")
    kappa, _ = vertex_connectivity(g)
    bound = g.n / 2 + 1
    report = TheoremReport("lemma41", hypothesis_met=2 * kappa >= g.n, conclusion_holds=None,
                           reproduction=repro, diagnostics={"kappa": kappa, "bound": bound})
    if report.hypothesis_met or search:
        try:
            cycle = longest_alt_cycle(g, m, budget=budget)
        except SearchBudgetExceeded:
            report.budget_exceeded = True
            return report
        length = cycle.length if cycle else 0
        report.witness = cycle
        report.diagnostics["longest_cycle"] = length
        report.conclusion_holds = length >= bound
    return report


def check_thm42(g: Graph, m: Matching, *, search: bool = True, budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """Connectivity >= n/2: alternating Hamilton cycle, or G1 with its jointing matching."""
    require_perfect(g, m)
    repro = reproduction_data(g, m)
    if not is_connected(g):
        return _skip("thm42", repro, "disconnected")
    if g.n < 4:
        return _skip("thm42", repro, "alternating Hamilton cycle not applicable for n < 4")
    kappa, _ = vertex_connectivity(g)
    report = TheoremReport("thm42", hypothesis_met=2 * kappa >= g.n, conclusion_holds=None,
                           reproduction=repro, diagnostics={"kappa": kappa, "threshold": g.n / 2})
    if report.hypothesis_met or search:
        _search(report, find_alt_hamilton_cycle, g, m, budget)
        if report.conclusion_holds is False:
            found = recognize_g1(g)
            if found is not None and found[1] == m:
                report.exception_branch = G1_JOINTING
                report.diagnostics["g1_n"] = found[0]
    return report


def check_corollary43(g: Graph, k: int, m: Matching, *, search: bool = True,
                      budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """k-extendable with k >= n/4 gives an alternating Hamilton cycle for every perfect matching."""
    require_perfect(g, m)
    repro = reproduction_data(g, m, k=k)
    if not is_connected(g):
        return _skip("cor43", repro, "disconnected", k=k)
    if g.n < 4:
        return _skip("cor43", repro, "alternating Hamilton cycle not applicable for n < 4", k=k)
    if 4 * k < g.n:
        return _skip("cor43", repro, "k < n/4", k=k)
    if k > max_extendability_k(g):
        return _skip("cor43", repro, "k > (n-2)/2", k=k)
    ok, witness = is_k_extendable(g, k)
    report = TheoremReport("cor43", hypothesis_met=ok, conclusion_holds=None, reproduction=repro,
                           diagnostics={"k": k})
    if witness is not None:
        report.diagnostics["non_extending"] = [list(e) for e in witness.edges]
    if ok or search:
        _search(report, find_alt_hamilton_cycle, g, m, budget)
    return report


def find_cycle_through(g: Graph, required: Sequence[tuple[int, int]],
                       budget: int = DEFAULT_BUDGET) -> Optional[list[int]]:
    """A cycle containing every edge of an independent edge set, by exhaustive search."""
    partner = {}
    for u, v in required:
        partner[u], partner[v] = v, u
    if not required:
        starts = [(u, v) for u, v in g.edges()]
    else:
        starts = [tuple(required[0])]
    total = len(required)
    expansions = [0]
    path: list[int] = []

    def rec(tail: int, visited: int, used: int, came_by_required: bool) -> bool:
        expansions[0] += 1
        if expansions[0] > budget:
            raise SearchBudgetExceeded(budget)
        head = path[0]
        if tail in partner and not came_by_required:
            s = partner[tail]
            if s == head:
                return used + 1 == total and len(path) >= 3
            if visited >> s & 1:
                return False
            path.append(s)
            if rec(s, visited | 1 << s, used + 1, True):
                return True
            path.pop()
            return False
        if used == total and len(path) >= 3 and g.has_edge(tail, head):
            return True
        for w in g.adj[tail]:
            if visited >> w & 1:
                continue
            path.append(w)
            if rec(w, visited | 1 << w, used, False):
                return True
            path.pop()
        return False

    for a, b in starts:
        path[:] = [a, b]
        if rec(b, 1 << a | 1 << b, 1 if required else 0, bool(required)):
            return list(path)
    return None


def probe_lovasz_woodall(g: Graph, l_edges: Sequence[tuple[int, int]], *,
                         budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """Exploratory probe: is there a cycle through every edge of ``l_edges``?

    The hypothesis asks for k-connectivity with k = |L|, and k even or
    G - L connected.
    """
    edges = [(min(u, v), max(u, v)) for u, v in l_edges]
    if not edges:
        raise ValueError("edge set must be non-empty")
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        if u in seen or v in seen:
            raise ValueError("edge set is not independent")
        seen.update((u, v))
    k = len(edges)
    kappa, _ = vertex_connectivity(g)
    rest_connected = is_connected(g.delete_edges(edges))
    report = TheoremReport("lw", hypothesis_met=kappa >= k and (k % 2 == 0 or rest_connected),
                           conclusion_holds=None, exploratory=True,
                           reproduction=reproduction_data(g, l_edges=[list(e) for e in edges]),
                           diagnostics={"k": k, "kappa": kappa, "g_minus_l_connected": rest_connected})
    try:
        cycle = find_cycle_through(g, edges, budget=budget)
    except SearchBudgetExceeded:
        report.budget_exceeded = True
        return report
    report.conclusion_holds = cycle is not None
    report.diagnostics["cycle"] = cycle
    return report


def _lemma_sweep(theorem_id: str, g: Graph, m: Matching, longest: list, validator: Callable,
                 budget: int) -> TheoremReport:
    repro = reproduction_data(g, m)
    report = TheoremReport(theorem_id, hypothesis_met=False, conclusion_holds=None, reproduction=repro)
    checked = 0
    try:
        for inner in longest:
            for outer in iter_closed_alt_paths(g, m, avoid=inner.vertices, budget=budget):
                checked += 1
                if not validator(g, m, inner, outer):
                    report.hypothesis_met = True
                    report.conclusion_holds = False
                    report.witness = inner
                    report.diagnostics.update({"violating_path": list(outer.vertices), "pairs_checked": checked})
                    return report
    except SearchBudgetExceeded:
        report.budget_exceeded = True
        return report
    report.hypothesis_met = checked > 0
    report.conclusion_holds = True if checked else None
    report.diagnostics.update({"longest": len(longest), "pairs_checked": checked})
    return report


def check_lemma13(g: Graph, m: Matching, *, budget: int = DEFAULT_BUDGET, **_) -> TheoremReport:
    """Exhaustive check of the cycle edge bound over every longest alternating cycle.

    The hypothesis counts as met when some longest cycle leaves room for
    a closed alternating path outside it.
    """
    require_perfect(g, m)
    if not is_connected(g):
        return _skip("lemma13", reproduction_data(g, m), "disconnected")
    try:
        cycles = list(iter_alt_cycles(g, m, budget=budget))
    except SearchBudgetExceeded:
        return TheoremReport("lemma13", False, None, budget_exceeded=True, reproduction=reproduction_data(g, m))
    top = max((c.length for c in cycles), default=0)
    return _lemma_sweep("lemma13", g, m, [c for c in cycles if c.length == top], validate_lemma13, budget)


def check_lemma14(g: Graph, m: Matching, *, budget: int = DEFAULT_BUDGET, **_) -> TheoremReport:
    """Exhaustive check of the path edge bound over every longest closed alternating path."""
    require_perfect(g, m)
    if not is_connected(g):
        return _skip("lemma14", reproduction_data(g, m), "disconnected")
    try:
        paths = list(iter_closed_alt_paths(g, m, budget=budget))
    except SearchBudgetExceeded:
        return TheoremReport("lemma14", False, None, budget_exceeded=True, reproduction=reproduction_data(g, m))
    top = max(p.length for p in paths)
    return _lemma_sweep("lemma14", g, m, [p for p in paths if p.length == top], validate_lemma14, budget)


def corollary_k(nu: int) -> int:
    return math.ceil(nu / 4)


MATCHING_CHECKERS = {
    "thm21": check_thm21,
    "thm31": check_thm31,
    "lemma41": check_lemma41,
    "thm42": check_thm42,
    "lemma13": check_lemma13,
    "lemma14": check_lemma14,
}


def recheck(report: TheoremReport, budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """Re-run the checker named by a report on its own reproduction data."""
    g, m = instance_from_reproduction(report.reproduction)
    tid = report.theorem_id
    k = report.reproduction.get("k")
    if tid in MATCHING_CHECKERS:
        return MATCHING_CHECKERS[tid](g, m, budget=budget)
    if tid == "cor43":
        return check_corollary43(g, k, m, budget=budget)
    if tid == "thm11":
        return check_theorem_1_1(g, k)
    if tid == "thm12":
        return check_theorem_1_2(g, k)
    if tid == "lw":
        return probe_lovasz_woodall(g, [tuple(e) for e in report.reproduction["l_edges"]], budget=budget)
    raise ValueError(f"unknown theorem id {tid!r}")
