"""Exhaustive sweeps of the checkers over small graphs."""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
from pathlib import Path
from typing import Iterator, Optional

from .alternating import DEFAULT_BUDGET
from .extendability import check_theorem_1_1, check_theorem_1_2, max_extendability_k
from .formats import FormatError, PathLike, decode_graph6, iter_graph6_file
from .graph import Graph, is_connected
from .matching import enum_k_matchings, enum_perfect_matchings
from .report import TheoremReport
from .theorems import MATCHING_CHECKERS, check_corollary43, corollary_k, probe_lovasz_woodall, recheck

log = logging.getLogger(__name__)

BUILTIN = "builtin_labeled"
ALL_PMS = "all_perfect_matchings"
ONE_PM = "one_per_graph"
THEOREM_IDS = ("thm11", "thm12", "thm21", "thm31", "lemma13", "lemma14", "lemma41", "thm42", "cor43", "lw")
MAX_BUILTIN_ORDER = 6

EXIT_CLEAN = 0
EXIT_COUNTEREXAMPLE = 2
EXIT_BUDGET = 3


def enumerate_labeled_graphs(nu: int, connected_only: bool = False) -> Iterator[Graph]:
    """All 2^(nu(nu-1)/2) labelled graphs; bit i of the index selects the i-th vertex pair."""
    if not 1 <= nu <= MAX_BUILTIN_ORDER:
        raise ValueError(f"labelled enumeration is limited to 1 <= nu <= {MAX_BUILTIN_ORDER}; "
                         "use a graph6 catalog for larger orders")
    pairs = list(combinations(range(nu), 2))
    for code in range(1 << len(pairs)):
        g = Graph(nu, (pairs[i] for i in range(len(pairs)) if code >> i & 1))
        if not connected_only or is_connected(g):
            yield g


def ingest_graph6(path: PathLike, errors: Optional[list] = None) -> Iterator[Graph]:
    """Graphs of a graph6 file; malformed lines are logged and skipped."""
    sink: list = [] if errors is None else errors
    for g in iter_graph6_file(path, sink):
        yield g
    for err in sink:
        log.warning("%s: %s", path, err)


@dataclass
class SweepConfig:
    nu_range: list[int]
    theorem_ids: list[str]
    source: str = BUILTIN
    graph6_path: Optional[str] = None
    matching_mode: str = ALL_PMS
    budget: int = DEFAULT_BUDGET
    parallelism: int = 1
    search_when_unmet: bool = True
    counterexamples_path: Optional[str] = None

    def __post_init__(self):
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.source == BUILTIN:
            if any(not 1 <= nu <= MAX_BUILTIN_ORDER for nu in self.nu_range):
                raise ValueError(f"builtin_labeled source supports nu <= {MAX_BUILTIN_ORDER} only")
        elif self.source == "graph6":
            if not self.graph6_path:
                raise ValueError("graph6 source needs graph6_path")
        else:
            raise ValueError(f"unknown source {self.source!r}")
        if self.matching_mode not in (ALL_PMS, ONE_PM):
            raise ValueError(f"unknown matching mode {self.matching_mode!r}")
        unknown = set(self.theorem_ids) - set(THEOREM_IDS)
        if unknown:
            raise ValueError(f"unknown theorem ids {sorted(unknown)}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        d = dict(d)
        source = d.pop("source", BUILTIN)
        if isinstance(source, dict):
            d["graph6_path"] = source["graph6"]
            source = "graph6"
        if "theorems" in d:
            d["theorem_ids"] = d.pop("theorems")
        return cls(source=source, **d)

    @classmethod
    def load(cls, path: PathLike) -> "SweepConfig":
        cfg = cls.from_dict(json.loads(Path(path).read_text()))
        if cfg.graph6_path and not Path(cfg.graph6_path).is_absolute():
            cfg.graph6_path = str(Path(path).parent / cfg.graph6_path)
        return cfg


@dataclass
class TheoremTally:
    instances: int = 0
    hypothesis_met: int = 0
    conclusion_held: int = 0
    exceptions: int = 0
    budget_exceeded: int = 0
    undecided: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)
    exception_instances: list = field(default_factory=list)
    budget_instances: list = field(default_factory=list)

    def add(self, report: TheoremReport) -> None:
        self.instances += 1
        if report.diagnostics.get("skipped"):
            self.skipped += 1
        if report.budget_exceeded:
            self.budget_exceeded += 1
            self.budget_instances.append(report.reproduction)
        if not report.hypothesis_met:
            return
        self.hypothesis_met += 1
        if report.budget_exceeded:
            self.undecided += 1
        elif report.is_counterexample:
            self.counterexamples.append(report.to_dict())
        elif report.exception_branch:
            self.exceptions += 1
            self.exception_instances.append(report.reproduction)
        elif report.conclusion_holds:
            self.conclusion_held += 1

    def merge(self, other: "TheoremTally") -> None:
        for name in ("instances", "hypothesis_met", "conclusion_held", "exceptions", "budget_exceeded",
                     "undecided", "skipped"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.counterexamples.extend(other.counterexamples)
        self.exception_instances.extend(other.exception_instances)
        self.budget_instances.extend(other.budget_instances)

    def counts(self) -> dict:
        return {"instances": self.instances, "hypothesis_met": self.hypothesis_met,
                "conclusion_held": self.conclusion_held, "exceptions": self.exceptions,
                "counterexamples": len(self.counterexamples), "budget_exceeded": self.budget_exceeded,
                "undecided": self.undecided, "skipped": self.skipped}


@dataclass
class SweepSummary:
    graphs_seen: int = 0
    graphs_checked: int = 0
    matchings_seen: int = 0
    theorems: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def tally(self, theorem_id: str) -> TheoremTally:
        return self.theorems.setdefault(theorem_id, TheoremTally())

    def merge(self, other: "SweepSummary") -> None:
        self.graphs_seen += other.graphs_seen
        self.graphs_checked += other.graphs_checked
        self.matchings_seen += other.matchings_seen
        for tid, tally in other.theorems.items():
            self.tally(tid).merge(tally)

    @property
    def counterexamples(self) -> list:
        return [c for t in self.theorems.values() for c in t.counterexamples]

    @property
    def budget_exceeded_count(self) -> int:
        return sum(t.budget_exceeded for t in self.theorems.values())

    @property
    def exit_code(self) -> int:
        if self.counterexamples:
            return EXIT_COUNTEREXAMPLE
        if self.budget_exceeded_count:
            return EXIT_BUDGET
        return EXIT_CLEAN

    def counts(self) -> dict:
        """Everything except wall time; equal across worker counts."""
        return {"graphs_seen": self.graphs_seen, "graphs_checked": self.graphs_checked,
                "matchings_seen": self.matchings_seen,
                "theorems": {tid: t.counts() for tid, t in sorted(self.theorems.items())}}

    def to_dict(self) -> dict:
        d = self.counts()
        d["wall_time"] = round(self.wall_time, 3)
        d["exit_code"] = self.exit_code
        d["budget_exceeded_instances"] = {tid: t.budget_instances for tid, t in sorted(self.theorems.items())
                                          if t.budget_instances}
        d["exception_instances"] = {tid: t.exception_instances for tid, t in sorted(self.theorems.items())
                                    if t.exception_instances}
        return d


def check_graph(g: Graph, cfg: SweepConfig, summary: SweepSummary) -> None:
    """Run every configured checker on one graph, adding to ``summary``."""
    summary.graphs_seen += 1
    if g.n not in cfg.nu_range or not is_connected(g):
        return
    summary.graphs_checked += 1
    ids = cfg.theorem_ids
    even = g.n % 2 == 0
    search = cfg.search_when_unmet
    if even and "thm11" in ids:
        for k in range(max_extendability_k(g) + 1):
            summary.tally("thm11").add(check_theorem_1_1(g, k))
    if even and "thm12" in ids:
        for k in range(corollary_k(g.n), max_extendability_k(g) + 1):
            summary.tally("thm12").add(check_theorem_1_2(g, k))
    if "lw" in ids:
        for k in range(1, 4):
            for lm in enum_k_matchings(g, k):
                summary.tally("lw").add(probe_lovasz_woodall(g, lm.edges, budget=cfg.budget))
    per_matching = [t for t in ids if t in MATCHING_CHECKERS or t == "cor43"]
    if not even or not per_matching:
        return
    matchings = enum_perfect_matchings(g)
    if cfg.matching_mode == ONE_PM:
        matchings = islice(matchings, 1)
    for m in matchings:
        summary.matchings_seen += 1
        for tid in per_matching:
            if tid == "cor43":
                report = check_corollary43(g, corollary_k(g.n), m, search=search, budget=cfg.budget)
            elif tid in ("lemma13", "lemma14"):
                report = MATCHING_CHECKERS[tid](g, m, budget=cfg.budget)
            else:
                report = MATCHING_CHECKERS[tid](g, m, search=search, budget=cfg.budget)
            summary.tally(tid).add(report)


def _source_items(cfg: SweepConfig) -> list:
    """Picklable work items identifying each graph of the source, in order."""
    if cfg.source == BUILTIN:
        return [(nu, code) for nu in cfg.nu_range for code in range(1 << (nu * (nu - 1) // 2))]
    items = []
    with open(cfg.graph6_path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line:
                items.append((lineno, line))
    return items


def _materialize(item, cfg: SweepConfig) -> Optional[Graph]:
    if cfg.source == BUILTIN:
        nu, code = item
        pairs = list(combinations(range(nu), 2))
        return Graph(nu, (pairs[i] for i in range(len(pairs)) if code >> i & 1))
    lineno, line = item
    try:
        return decode_graph6(line)
    except (FormatError, ValueError) as exc:
        log.warning("%s: line %d: %s", cfg.graph6_path, lineno, exc)
        return None


def _run_chunk(args) -> SweepSummary:
    cfg, items = args
    summary = SweepSummary()
    for item in items:
        g = _materialize(item, cfg)
        if g is not None:
            check_graph(g, cfg, summary)
    return summary


def _chunks(items: list, count: int) -> list[list]:
    size = max(1, -(-len(items) // count))
    return [items[i:i + size] for i in range(0, len(items), size)]


def run_sweep(cfg: SweepConfig) -> SweepSummary:
    """Run a sweep; counts do not depend on ``cfg.parallelism``.

    Workers take contiguous slices of the source and summaries are merged
    in slice order. Counterexamples go to ``cfg.counterexamples_path`` as
    NDJSON when set.
    """
    start = time.perf_counter()
    summary = SweepSummary()
    for tid in cfg.theorem_ids:
        summary.tally(tid)
    items = _source_items(cfg) if cfg.theorem_ids else []
    if cfg.parallelism == 1 or len(items) < 2:
        summary.merge(_run_chunk((cfg, items)))
    else:
        chunks = _chunks(items, cfg.parallelism * 4)
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            for part in pool.map(_run_chunk, [(cfg, c) for c in chunks]):
                summary.merge(part)
    summary.wall_time = time.perf_counter() - start
    if cfg.counterexamples_path:
        write_counterexamples(summary.counterexamples, cfg.counterexamples_path)
    log.info("sweep done: %s", json.dumps(summary.counts()))
    return summary


def write_counterexamples(records: list, path: PathLike) -> None:
    with open(path, "w") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")


def load_counterexamples(path: PathLike) -> list[TheoremReport]:
    with open(path) as fh:
        return [TheoremReport.from_dict(json.loads(line)) for line in fh if line.strip()]


def reverify_counterexamples(path: PathLike, budget: int = DEFAULT_BUDGET) -> list[bool]:
    """Re-run each persisted record; True where it is still a counterexample."""
    return [recheck(r, budget=budget).is_counterexample for r in load_counterexamples(path)]


def default_parallelism(fallback: int = 1) -> int:
    """Worker count from ALTMATCH_WORKERS, else ``fallback``."""
    value = os.environ.get("ALTMATCH_WORKERS")
    return int(value) if value else fallback
