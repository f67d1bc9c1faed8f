"""Acceptance criteria 1-9, each printed as one PASS/FAIL line in the summary.

The order-8 instances come from catalogs/graphs8.g6 (all 12346 graphs up
to isomorphism); smaller orders use every labelled graph.
"""

from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest

from acceptance_log import criterion
from altmatch.alternating import find_alt_hamilton_cycle
from altmatch.constructor import build_alt_hamilton_path, replay_trace
from altmatch.extendability import is_k_extendable, max_extendability_k
from altmatch.families import gen_g1, gen_remark_tight, jointing_matchings
from altmatch.formats import iter_graph6_file
from altmatch.graph import Graph, bipartition, is_connected, vertex_connectivity
from altmatch.harness import SweepConfig, enumerate_labeled_graphs, run_sweep
from altmatch.matching import enum_perfect_matchings, max_matching
from altmatch.report import instance_from_reproduction
from altmatch.theorems import check_thm31, min_cross_degree_sum
from fixtures import dense_suite
from oracles import (
    alt_hamilton_cycle,
    alternating_problems,
    brute_connectivity,
    brute_extendability_flags,
    brute_matching_number,
    is_isomorphic,
)

CATALOG = Path(__file__).resolve().parents[1] / "catalogs" / "graphs8.g6"


@pytest.fixture(scope="module")
def catalog8():
    errors = []
    graphs = list(iter_graph6_file(CATALOG, errors))
    assert not errors and len(graphs) == 12346
    return graphs


def _sweep(theorems, nu_range, **kw):
    return run_sweep(SweepConfig(nu_range=nu_range, theorem_ids=theorems, **kw))


def _catalog_sweep(theorems, **kw):
    return run_sweep(SweepConfig(nu_range=[8], theorem_ids=theorems, source="graph6",
                                 graph6_path=str(CATALOG), search_when_unmet=False, **kw))


def _assert_clean(summary, tid):
    c = summary.theorems[tid].counts()
    assert c["counterexamples"] == 0, summary.theorems[tid].counterexamples[:1]
    assert c["undecided"] == 0 and c["budget_exceeded"] == 0
    assert c["hypothesis_met"] == c["conclusion_held"] + c["exceptions"]
    return c


def test_criterion_1_exceptional_family():
    with criterion(1, "G1 with jointing matching has no alternating Hamilton cycle") as notes:
        for n in (1, 2):
            g, joint = gen_g1(n)
            kappa, cert = vertex_connectivity(g)
            assert kappa == 2 * n + 1 == g.n // 2 and cert.verify(g, kappa)
            assert find_alt_hamilton_cycle(g, joint) is None
            assert alt_hamilton_cycle(g.n, list(g.edges()), list(joint.mate)) is None
        prism, joint = gen_g1(1)
        others = [m for m in enum_perfect_matchings(prism) if m != joint]
        assert jointing_matchings(prism) == [joint] and len(others) == 3
        for m in others:
            c = find_alt_hamilton_cycle(prism, m)
            assert c is not None and not alternating_problems(6, list(prism.edges()), list(m.mate),
                                                              list(c.vertices), True)
        notes.append("n=1,2 absent; 3/3 non-jointing matchings of the prism give a cycle")


def test_criterion_2_remark_tightness():
    with criterion(2, "remark family misses the bipartite bound by exactly one") as notes:
        for t in (1, 2):
            g, m = gen_remark_tight(t)
            bip = bipartition(g)
            assert bip is not None and bip.certifies(g)
            cross = min(g.degree(x) + g.degree(y) for x in bip.part_a for y in bip.part_b)
            assert cross == min_cross_degree_sum(g) == g.n // 2 + 1
            assert find_alt_hamilton_cycle(g, m) is None
            assert alt_hamilton_cycle(g.n, list(g.edges()), list(m.mate)) is None
            notes.append(f"t={t}: nu={g.n}, min cross sum {cross}")


def test_criterion_3_thm31_sweep():
    with criterion(3, "closed Hamilton path theorem, all labelled graphs nu in {2,4,6}") as notes:
        serial = _sweep(["thm31"], [2, 4, 6])
        parallel = _sweep(["thm31"], [2, 4, 6], parallelism=2)
        c = _assert_clean(serial, "thm31")
        assert serial.graphs_seen == 2 + 64 + 32768
        assert serial.counts() == parallel.counts()
        assert c["exceptions"] == 0 and c["hypothesis_met"] > 0
        notes.append(f"{c['hypothesis_met']} instances met the hypothesis, all held; "
                     f"{serial.wall_time:.1f}s serial; 1 vs 2 workers identical")


def test_criterion_4_thm21_sweep():
    with criterion(4, "bipartite degree-sum theorem, nu in {4,6} labelled and nu=8 catalog") as notes:
        small = _sweep(["thm21"], [4, 6])
        big = _catalog_sweep(["thm21"])
        a, b = _assert_clean(small, "thm21"), _assert_clean(big, "thm21")
        assert a["hypothesis_met"] > 0 and b["hypothesis_met"] > 0
        notes.append(f"hypothesis met {a['hypothesis_met']} (nu<=6) + {b['hypothesis_met']} (nu=8), all held")


def test_criterion_5_thm42_lemma41_sweep():
    with criterion(5, "connectivity nu/2 theorem and longest-cycle lemma, nu in {4,6}") as notes:
        summary = _sweep(["thm42", "lemma41"], [4, 6])
        c42 = _assert_clean(summary, "thm42")
        c41 = _assert_clean(summary, "lemma41")
        assert c41["exceptions"] == 0
        prism, _ = gen_g1(1)
        hits = summary.theorems["thm42"].exception_instances
        # 6!/|Aut(prism)| = 720/12 labelled prisms, each with one jointing matching
        assert len(hits) == c42["exceptions"] == 60
        seen = set()
        for repro in hits:
            g, m = instance_from_reproduction(repro)
            assert g.n == 6 and is_isomorphic(6, list(g.edges()), list(prism.edges()))
            # jointing edges are the ones in no triangle
            assert all(not (g.adj_mask[a] & g.adj_mask[b]) for a, b in m.edges)
            assert alt_hamilton_cycle(6, list(g.edges()), list(m.mate)) is None
            seen.add(g)
        assert len(seen) == 60
        notes.append(f"{c42['hypothesis_met']} instances: {c42['conclusion_held']} cycles + "
                     f"{c42['exceptions']} prism/jointing; lemma bound held on {c41['hypothesis_met']}")


def test_criterion_6_corollary43():
    with criterion(6, "ceil(nu/4)-extendable graphs, nu in {4,6,8}") as notes:
        small = _sweep(["cor43"], [4, 6])
        big = _catalog_sweep(["cor43"])
        a, b = _assert_clean(small, "cor43"), _assert_clean(big, "cor43")
        assert a["exceptions"] == b["exceptions"] == 0
        assert a["hypothesis_met"] > 0 and b["hypothesis_met"] > 0
        notes.append(f"{a['hypothesis_met']} + {b['hypothesis_met']} (graph, matching) pairs, all with a cycle")


def test_criterion_7_oracle_equivalences(catalog8):
    with criterion(7, "searcher, blossom, connectivity and extendability vs oracles") as notes:
        atlas = [Graph(h.number_of_nodes(), h.edges()) for h in nx.graph_atlas_g()[1:]]
        upto8 = atlas + catalog8

        ham = 0
        for g in [h for h in upto8 if h.n % 2 == 0 and h.n >= 4]:
            edges = list(g.edges())
            for m in enum_perfect_matchings(g):
                ham += 1
                ours = find_alt_hamilton_cycle(g, m)
                theirs = alt_hamilton_cycle(g.n, edges, list(m.mate))
                assert (ours is None) == (theirs is None), (edges, m.edges)
                if ours is not None:
                    assert len(ours.vertices) == g.n
                    assert not alternating_problems(g.n, edges, list(m.mate), list(ours.vertices), True)
        assert ham >= 10**4

        for g in upto8:
            assert len(max_matching(g)) == brute_matching_number(g.n, list(g.edges()))
        for g in atlas:
            assert vertex_connectivity(g)[0] == brute_connectivity(g.n, list(g.edges()))
        ext = 0
        for g in [h for h in upto8 if h.n % 2 == 0]:
            flags = brute_extendability_flags(g.n, list(g.edges()))
            for k in range(max_extendability_k(g) + 1):
                ext += 1
                assert is_k_extendable(g, k)[0] == flags[k]
        notes.append(f"{ham} alternating Hamilton instances, {len(upto8)} matchings, "
                     f"{len(atlas)} connectivity, {ext} extendability checks; 0 disagreements")


def _pairs(graphs):
    for g in graphs:
        if g.n % 2 == 0 and is_connected(g):
            for m in enum_perfect_matchings(g):
                yield g, m


def test_criterion_8_constructor(catalog8):
    with criterion(8, "constructor succeeds and every step validates") as notes:
        small = [g for nu in (2, 4, 6) for g in enumerate_labeled_graphs(nu)]
        met = fallbacks = 0
        for g, m in _pairs(small + catalog8):
            report = check_thm31(g, m)
            if not report.hypothesis_met:
                continue
            met += 1
            result = build_alt_hamilton_path(g, m)
            assert (result.path is not None) == bool(report.conclusion_holds)
            assert result.path is not None
            assert not alternating_problems(g.n, list(g.edges()), list(m.mate),
                                            list(result.path.vertices), False)
            assert len(result.path.vertices) == g.n
            assert replay_trace(g, m, result.trace) == []
            assert len(result.trace) <= (g.n - 2) // 2
            fallbacks += result.fallback
        suite = dense_suite()
        dense_fallbacks = 0
        for g, m in suite:
            result = build_alt_hamilton_path(g, m)
            assert result.path is not None and len(result.path.vertices) == g.n
            assert not alternating_problems(g.n, list(g.edges()), list(m.mate),
                                            list(result.path.vertices), False)
            assert replay_trace(g, m, result.trace) == []
            dense_fallbacks += result.fallback
        assert dense_fallbacks < len(suite)
        notes.append(f"{met} small instances, {fallbacks} fallbacks; dense suite fallback rate "
                     f"{dense_fallbacks}/{len(suite)}")


def test_criterion_9_lemma_sweeps():
    with criterion(9, "longest cycle/path edge bounds, nu <= 8") as notes:
        small = _sweep(["lemma13", "lemma14"], [2, 4, 6])
        big = _catalog_sweep(["lemma13", "lemma14"])
        counts = [_assert_clean(s, tid) for s in (small, big) for tid in ("lemma13", "lemma14")]
        assert all(c["hypothesis_met"] > 0 for c in counts)
        checked = sum(c["hypothesis_met"] for c in counts)
        notes.append(f"{checked} instances with an outside closed path, 0 violations; "
                     f"{small.wall_time + big.wall_time:.0f}s")


def test_bipartite_cross_sum_is_pairwise_minimum():
    # sanity for the helper used in criteria 2 and 4
    for g in enumerate_labeled_graphs(5):
        bip = bipartition(g)
        if bip is None or not bip.part_a or not bip.part_b:
            continue
        direct = min(g.degree(x) + g.degree(y) for x, y in combinations(range(g.n), 2)
                     if bip.side[x] != bip.side[y])
        assert direct == min_cross_degree_sum(g)
