"""Lengthening engine for closed alternating paths.

Each move takes a closed alternating path P = u0 u1 ... u_{L-1}
(u_{2j} u_{2j+1} matched) and an outside matched edge xy, and returns a
closed alternating path covering V(P) plus x and y:

* ``extend_tail``: xy hangs off an end of P, possibly after rotating P
  through a chord from that end.
* ``cycle_close_reopen``: V(P) spans an alternating cycle (end-to-end
  chord, or the crossing chords u0 u_{2i} and u_{2i-1} u_{L-1}); open it
  next to a neighbour of x.
* ``removable_rotation``: chords u0 u_{2i-1} and u_{L-1} u_{2i} split P
  into two cycles; x attaches to one and y to the other.

When no move applies the engine falls back to exact search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .alternating import (
    CLOSED_PATH,
    DEFAULT_BUDGET,
    AlternatingWalk,
    InvalidWalk,
    find_closed_alt_hamilton_path,
    walk_problems,
)
from .graph import Graph
from .matching import Matching, require_perfect

EXTEND_TAIL = "extend_tail"
CYCLE_CLOSE_REOPEN = "cycle_close_reopen"
REMOVABLE_ROTATION = "removable_rotation"
STEP_KINDS = (EXTEND_TAIL, CYCLE_CLOSE_REOPEN, REMOVABLE_ROTATION)


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _edge_set(vs, cyclic: bool = False) -> set[tuple[int, int]]:
    pairs = list(zip(vs, vs[1:]))
    if cyclic:
        pairs.append((vs[-1], vs[0]))
    return {_edge(a, b) for a, b in pairs}


@dataclass(frozen=True)
class ImprovementStep:
    kind: str
    applied_edges: tuple[tuple[int, int], ...]
    dropped_edges: tuple[tuple[int, int], ...]
    path: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind,
                "applied_edges": [list(e) for e in self.applied_edges],
                "dropped_edges": [list(e) for e in self.dropped_edges],
                "path": list(self.path)}

    @classmethod
    def from_dict(cls, d: dict) -> "ImprovementStep":
        return cls(d["kind"], tuple(tuple(e) for e in d["applied_edges"]),
                   tuple(tuple(e) for e in d["dropped_edges"]), tuple(d["path"]))


def _step(kind: str, before: list[int], after: list[int]) -> ImprovementStep:
    old, new = _edge_set(before), _edge_set(after)
    return ImprovementStep(kind, tuple(sorted(new - old)), tuple(sorted(old - new)), tuple(after))


def validate_step(g: Graph, m: Matching, before: AlternatingWalk, step: ImprovementStep) -> list[str]:
    """Problems with a step, judged only from the graph, matching and sequences."""
    problems = walk_problems(g, m, step.path, CLOSED_PATH)
    if step.kind not in STEP_KINDS:
        problems.append(f"unknown step kind {step.kind!r}")
    if len(step.path) - 1 < before.length + 2:
        problems.append("step did not lengthen the path by a matched edge")
    if not set(before.vertices) <= set(step.path):
        problems.append("step lost vertices of the previous path")
    expected = (_edge_set(before.vertices) - set(step.dropped_edges)) | set(step.applied_edges)
    if expected != _edge_set(step.path):
        problems.append("applied/dropped edges do not replay to the new path")
    return problems


def _open_ending_at(cycle: list[int], m: Matching, a: int) -> list[int]:
    """Closed path through all of ``cycle`` ending with the matched edge into ``a``.

    A two-vertex "cycle" is just a matched edge.
    """
    if len(cycle) == 2:
        return [m.mate[a], a]
    j = cycle.index(a)
    k = len(cycle)
    if cycle[(j - 1) % k] == m.mate[a]:
        return [cycle[(j + 1 + t) % k] for t in range(k)]
    return [cycle[(j - 1 - t) % k] for t in range(k)]


def _open_starting_at(cycle: list[int], m: Matching, b: int) -> list[int]:
    return _open_ending_at(cycle, m, b)[::-1]


def _outside(m: Matching, on_path: set[int]) -> Iterator[tuple[int, int]]:
    """Outside matched edges as ``(x, y)``, each in both orientations, x ascending."""
    for x in range(m.n):
        if x not in on_path:
            yield x, m.mate[x]


def _extend_tail(g: Graph, m: Matching, p: list[int], on_path: set[int]) -> Optional[list[int]]:
    head, tail = p[0], p[-1]
    for x, y in _outside(m, on_path):
        if g.has_edge(tail, x):
            return p + [x, y]
    for x, y in _outside(m, on_path):
        if g.has_edge(head, x):
            return [y, x] + p
    half = len(p) // 2
    for i in range(1, half):
        if g.has_edge(head, p[2 * i]):
            # x u_{2i-1} ... u0 u_{2i} ... u_{L-1}
            for x, y in _outside(m, on_path):
                if g.has_edge(x, p[2 * i - 1]):
                    return [y, x] + p[2 * i - 1::-1] + p[2 * i:]
        if g.has_edge(tail, p[2 * i - 1]):
            # u0 ... u_{2i-1} u_{L-1} ... u_{2i} x
            for x, y in _outside(m, on_path):
                if g.has_edge(x, p[2 * i]):
                    return p[:2 * i] + p[:2 * i - 1:-1] + [x, y]
    return None


def spanning_cycles(g: Graph, p: list[int]) -> Iterator[list[int]]:
    """Alternating cycles on exactly V(P) built from chords at the ends of P."""
    head, tail = p[0], p[-1]
    if len(p) >= 4 and g.has_edge(head, tail):
        yield list(p)
    for i in range(1, len(p) // 2):
        if g.has_edge(head, p[2 * i]) and g.has_edge(p[2 * i - 1], tail):
            yield [head] + p[2 * i:] + p[2 * i - 1:0:-1]


def _cycle_close_reopen(g: Graph, m: Matching, p: list[int], on_path: set[int]) -> Optional[list[int]]:
    for cycle in spanning_cycles(g, p):
        for x, y in _outside(m, on_path):
            for c in sorted(cycle):
                if g.has_edge(x, c):
                    return _open_ending_at(cycle, m, c) + [x, y]
    return None


def _removable_rotation(g: Graph, m: Matching, p: list[int], on_path: set[int]) -> Optional[list[int]]:
    head, tail = p[0], p[-1]
    for i in range(1, len(p) // 2):
        if not (g.has_edge(head, p[2 * i - 1]) and g.has_edge(tail, p[2 * i])):
            continue
        c0, c1 = p[:2 * i], p[2 * i:]
        for x, y in _outside(m, on_path):
            a = next((c for c in sorted(c0) if g.has_edge(x, c)), None)
            b = next((c for c in sorted(c1) if g.has_edge(y, c)), None)
            if a is not None and b is not None:
                return _open_ending_at(c0, m, a) + [x, y] + _open_starting_at(c1, m, b)
    return None


_MOVES = ((EXTEND_TAIL, _extend_tail), (CYCLE_CLOSE_REOPEN, _cycle_close_reopen),
          (REMOVABLE_ROTATION, _removable_rotation))


def improve_once(g: Graph, m: Matching, p: AlternatingWalk) -> Optional[tuple[ImprovementStep, AlternatingWalk]]:
    """Apply the first move that lengthens ``p``, or return None.

    Moves are tried in the order extend_tail, cycle_close_reopen,
    removable_rotation; within a move the lowest indices win. Every move
    adds exactly one matched edge.
    """
    problems = walk_problems(g, m, p.vertices, CLOSED_PATH)
    if problems or p.shape != CLOSED_PATH:
        raise InvalidWalk(f"not a closed alternating path: {problems}")
    if len(p.vertices) == g.n:
        raise ValueError("path is already spanning")
    before = list(p.vertices)
    on_path = set(before)
    for kind, move in _MOVES:
        after = move(g, m, before, on_path)
        if after is not None:
            return _step(kind, before, after), AlternatingWalk.build(m, after, CLOSED_PATH)
    return None


@dataclass
class BuildResult:
    """Outcome of the engine.

    ``path`` is None only when no closed alternating Hamilton path exists.
    ``fallback`` marks a path found by exact search after the moves
    stalled at ``stalled``.
    """

    path: Optional[AlternatingWalk]
    trace: list[ImprovementStep] = field(default_factory=list)
    fallback: bool = False
    stalled: Optional[AlternatingWalk] = None

    def to_dict(self) -> dict:
        return {"path": self.path.to_dict() if self.path else None,
                "trace": [s.to_dict() for s in self.trace],
                "fallback": self.fallback,
                "stalled": self.stalled.to_dict() if self.stalled else None}


def build_alt_hamilton_path(g: Graph, m: Matching, budget: int = DEFAULT_BUDGET) -> BuildResult:
    """Grow a closed alternating path from the smallest matched edge until it spans."""
    require_perfect(g, m)
    u, v = m.edges[0]
    walk = AlternatingWalk.build(m, [u, v], CLOSED_PATH)
    trace: list[ImprovementStep] = []
    while len(walk.vertices) < g.n:
        improved = improve_once(g, m, walk)
        if improved is None:
            exact = find_closed_alt_hamilton_path(g, m, budget=budget)
            return BuildResult(exact, trace, fallback=True, stalled=walk)
        step, walk = improved
        trace.append(step)
    return BuildResult(walk, trace)


def replay_trace(g: Graph, m: Matching, trace: list[ImprovementStep]) -> list[str]:
    """Validate a whole trace from the smallest matched edge onward."""
    u, v = m.edges[0]
    walk = AlternatingWalk.build(m, [u, v], CLOSED_PATH)
    problems = []
    for i, step in enumerate(trace):
        problems.extend(f"step {i}: {msg}" for msg in validate_step(g, m, walk, step))
        walk = AlternatingWalk.build(m, step.path, CLOSED_PATH)
    return problems
