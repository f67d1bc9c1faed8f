import json

import pytest

from altmatch import theorems
from altmatch.formats import write_graph6_file
from altmatch.harness import (
    EXIT_BUDGET,
    EXIT_CLEAN,
    EXIT_COUNTEREXAMPLE,
    SweepConfig,
    enumerate_labeled_graphs,
    load_counterexamples,
    reverify_counterexamples,
    run_sweep,
)


@pytest.mark.parametrize("nu, count", [(3, 8), (4, 64)])
def test_labelled_counts(nu, count):
    assert sum(1 for _ in enumerate_labeled_graphs(nu)) == count


def test_labelled_count_nu6():
    assert sum(1 for _ in enumerate_labeled_graphs(6)) == 32768


def test_order_limit():
    with pytest.raises(ValueError):
        next(enumerate_labeled_graphs(7))
    with pytest.raises(ValueError):
        SweepConfig(nu_range=[8], theorem_ids=["thm31"])


def test_config_validation():
    for bad in ({"nu_range": [4], "theorems": ["nope"]},
                {"nu_range": [4], "theorems": [], "budget": 0},
                {"nu_range": [4], "theorems": [], "matching_mode": "some"},
                {"nu_range": [4], "theorems": [], "source": "elsewhere"}):
        with pytest.raises(ValueError):
            SweepConfig.from_dict(bad)


def test_empty_theorem_list():
    summary = run_sweep(SweepConfig(nu_range=[4], theorem_ids=[]))
    assert summary.counts() == {"graphs_seen": 0, "graphs_checked": 0, "matchings_seen": 0, "theorems": {}}
    assert summary.exit_code == EXIT_CLEAN


def test_conservation_and_tally_balance():
    summary = run_sweep(SweepConfig(nu_range=[2, 4], theorem_ids=["thm31", "thm42"]))
    assert summary.graphs_seen == 2 + 64
    for tally in summary.theorems.values():
        c = tally.counts()
        assert c["hypothesis_met"] == (c["conclusion_held"] + c["exceptions"]
                                       + c["counterexamples"] + c["undecided"])
        assert c["instances"] == summary.matchings_seen


def test_parallel_counts_match_serial():
    base = {"nu_range": [4], "theorems": ["thm31", "thm42", "lemma41", "cor43"]}
    one = run_sweep(SweepConfig.from_dict({**base, "parallelism": 1}))
    two = run_sweep(SweepConfig.from_dict({**base, "parallelism": 2}))
    assert one.counts() == two.counts()


def test_graph6_source(tmp_path):
    graphs = list(enumerate_labeled_graphs(4))
    path = tmp_path / "four.g6"
    write_graph6_file(graphs, path)
    with open(path, "a") as fh:
        fh.write("broken\x7f\n")
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"nu_range": [4], "theorems": ["thm31"], "source": {"graph6": "four.g6"}}))
    from_file = run_sweep(SweepConfig.load(cfg_path))
    builtin = run_sweep(SweepConfig(nu_range=[4], theorem_ids=["thm31"]))
    assert from_file.counts() == builtin.counts()


def test_budget_exit_code():
    summary = run_sweep(SweepConfig(nu_range=[4], theorem_ids=["thm42"], budget=1))
    assert summary.exit_code == EXIT_BUDGET
    tally = summary.theorems["thm42"]
    assert tally.budget_exceeded > 0 and not tally.counterexamples
    assert len(tally.budget_instances) == tally.budget_exceeded


def test_counterexample_sidecar_round_trip(tmp_path, monkeypatch):
    real = theorems.check_thm31

    def broken(g, m, **kw):
        report = real(g, m, **kw)
        if report.hypothesis_met and g.n == 4:
            report.conclusion_holds = False
        return report

    monkeypatch.setitem(theorems.MATCHING_CHECKERS, "thm31", broken)
    sidecar = tmp_path / "cx.ndjson"
    summary = run_sweep(SweepConfig(nu_range=[4], theorem_ids=["thm31"], counterexamples_path=str(sidecar)))
    assert summary.exit_code == EXIT_COUNTEREXAMPLE
    lines = sidecar.read_text().splitlines()
    assert len(lines) == len(summary.counterexamples) > 0
    records = load_counterexamples(sidecar)
    assert [r.to_dict() for r in records] == [json.loads(line) for line in lines]
    monkeypatch.undo()
    # re-running the genuine checker clears every fabricated record
    assert reverify_counterexamples(sidecar) == [False] * len(records)
