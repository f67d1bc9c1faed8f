"""M-alternating walks and exact searches over the port graph.

Contracting every matched edge ``ab`` of a perfect matching into a node
with two ports (``a`` and ``b``) turns an alternating walk into a walk on
nodes that enters each node through one port and leaves through the
other. Non-matched edges become arcs between ports. Every searcher below
works on that representation and expands its answer back to vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graph import Graph, is_bipartite
from .matching import Matching, require_perfect

CYCLE = "cycle"
CLOSED_PATH = "closed_path"
OPEN_PATH = "open_path"
SHAPES = (CYCLE, CLOSED_PATH, OPEN_PATH)

DEFAULT_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """An exact search ran out of node expansions before deciding."""

    def __init__(self, budget: int):
        super().__init__(f"search exceeded its budget of {budget} node expansions")
        self.budget = budget


class NotApplicable(ValueError):
    """Alternating Hamilton cycles are undefined for two vertices."""


class InvalidWalk(ValueError):
    pass


# --- walks -------------------------------------------------------------------

@dataclass(frozen=True)
class AlternatingWalk:
    """Vertex sequence of an alternating path or cycle.

    For a cycle the closing edge ``vertices[-1] -> vertices[0]`` is implied
    and ``matched`` has one flag per edge including it.
    """

    vertices: tuple[int, ...]
    shape: str
    matched: tuple[bool, ...]

    @classmethod
    def build(cls, m: Matching, vertices: Sequence[int], shape: str) -> "AlternatingWalk":
        vs = tuple(vertices)
        pairs = list(zip(vs, vs[1:]))
        if shape == CYCLE and vs:
            pairs.append((vs[-1], vs[0]))
        return cls(vs, shape, tuple(m.mate[a] == b for a, b in pairs))

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.matched)

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        pairs = list(zip(vs, vs[1:]))
        if self.shape == CYCLE:
            pairs.append((vs[-1], vs[0]))
        return pairs

    def unmatched_edges(self) -> list[tuple[int, int]]:
        return [e for e, f in zip(self.edges(), self.matched) if not f]

    def to_dict(self) -> dict:
        return {"shape": self.shape, "vertices": list(self.vertices),
                "matched_edge_flags": list(self.matched)}

    @classmethod
    def from_dict(cls, d: dict) -> "AlternatingWalk":
        return cls(tuple(d["vertices"]), d["shape"], tuple(bool(f) for f in d["matched_edge_flags"]))


def walk_problems(g: Graph, m: Matching, vertices: Sequence[int], shape: str) -> list[str]:
    """Everything wrong with ``vertices`` as an alternating walk of ``shape``.

    Reads only the graph, the matching and the sequence, so it can vouch
    for any searcher's output. An empty list means valid.
    """
    vs = list(vertices)
    problems = []
    if shape not in SHAPES:
        return [f"unknown shape {shape!r}"]
    if len(set(vs)) != len(vs):
        problems.append("repeated vertex")
    if any(not 0 <= v < g.n for v in vs):
        return problems + ["vertex out of range"]
    pairs = list(zip(vs, vs[1:]))
    if shape == CYCLE:
        if len(vs) < 4:
            problems.append("cycle needs at least 4 vertices")
        if vs:
            pairs.append((vs[-1], vs[0]))
    elif len(vs) < 2:
        problems.append("path needs at least one edge")
    for a, b in pairs:
        if not g.has_edge(a, b):
            problems.append(f"{a}-{b} is not an edge")
    flags = [m.mate[a] == b for a, b in pairs]
    for i in range(len(flags) - 1):
        if flags[i] == flags[i + 1]:
            problems.append(f"edges {i} and {i + 1} do not alternate")
    if shape == CYCLE and len(flags) > 1 and flags[0] == flags[-1]:
        problems.append("closing edge breaks alternation")
    if shape == CLOSED_PATH and flags and not (flags[0] and flags[-1]):
        problems.append("closed path must start and end with matched edges")
    if shape == OPEN_PATH and flags and (flags[0] or flags[-1]):
        problems.append("open path must start and end with unmatched edges")
    return problems


def is_valid_walk(g: Graph, m: Matching, walk: AlternatingWalk) -> bool:
    if walk_problems(g, m, walk.vertices, walk.shape):
        return False
    return walk.matched == AlternatingWalk.build(m, walk.vertices, walk.shape).matched


def canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate to put the smallest vertex first, heading to its smaller cycle neighbour."""
    vs = list(vertices)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if len(vs) > 2 and vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


# --- port graph --------------------------------------------------------------

@dataclass(frozen=True)
class PortGraph:
    """Matched edges as two-port nodes, unmatched edges as port-to-port arcs.

    ``ports[i]`` holds the endpoints of the i-th matched edge (in sorted
    edge order); ``out[i][p]`` lists the ``(node, port)`` targets of arcs
    leaving port ``p`` of node ``i``, ascending.
    """

    ports: tuple[tuple[int, int], ...]
    arcs: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    out: tuple[tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]], ...]
    locate: tuple[tuple[int, int], ...]

    @property
    def num_nodes(self) -> int:
        return len(self.ports)

    def expand(self, steps: Sequence[tuple[int, int]]) -> list[int]:
        """Vertex sequence for a list of ``(node, entry_port)`` steps."""
        vs = []
        for node, entry in steps:
            vs.append(self.ports[node][entry])
            vs.append(self.ports[node][1 - entry])
        return vs


def contract(g: Graph, m: Matching) -> PortGraph:
    require_perfect(g, m)
    ports = m.edges
    locate: list[tuple[int, int]] = [(0, 0)] * g.n
    for i, (a, b) in enumerate(ports):
        locate[a] = (i, 0)
        locate[b] = (i, 1)
    out: list[list[list[tuple[int, int]]]] = [[[], []] for _ in ports]
    arcs = []
    for u, v in g.edges():
        if m.mate[u] == v:
            continue
        pu, pv = locate[u], locate[v]
        arcs.append((pu, pv) if pu < pv else (pv, pu))
        out[pu[0]][pu[1]].append(pv)
        out[pv[0]][pv[1]].append(pu)
    return PortGraph(
        ports=tuple(ports),
        arcs=tuple(sorted(arcs)),
        out=tuple((tuple(sorted(o[0])), tuple(sorted(o[1]))) for o in out),
        locate=tuple(locate),
    )


class _Searcher:
    """Shared state for one budgeted search over a port graph."""

    def __init__(self, pg: PortGraph, budget: int):
        self.pg = pg
        self.budget = budget
        self.expansions = 0
        n = pg.num_nodes
        self.n = n
        self.port_nbrs = [[sum(1 << t for t in {t for t, _ in pg.out[i][p]}) for p in (0, 1)]
                          for i in range(n)]
        self.node_nbrs = [self.port_nbrs[i][0] | self.port_nbrs[i][1] for i in range(n)]
        self.closing = [[set(pg.out[i][p]) for p in (0, 1)] for i in range(n)]

    def tick(self) -> None:
        self.expansions += 1
        if self.expansions > self.budget:
            raise SearchBudgetExceeded(self.budget)

    def reach(self, node: int, allowed: int) -> int:
        """Nodes in ``allowed`` reachable from ``node`` (ports ignored)."""
        seen = 0
        frontier = self.node_nbrs[node] & allowed
        while frontier:
            seen |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.node_nbrs[low.bit_length() - 1]
                f ^= low
            frontier = nxt & allowed & ~seen
        return seen

    # Hamilton cycle ---------------------------------------------------------

    def hamilton_cycle(self) -> Optional[list[tuple[int, int]]]:
        n = self.n
        full = (1 << n) - 1
        steps = [(0, 0)]
        port_nbrs = self.port_nbrs

        def dead_end(unvisited: int, tail: int) -> bool:
            # every unvisited node needs an arc on each port into what is left
            ends = unvisited | 1 << tail | 1
            f = unvisited
            while f:
                low = f & -f
                x = low.bit_length() - 1
                room = ends & ~low
                if not (port_nbrs[x][0] & room and port_nbrs[x][1] & room):
                    return True
                f ^= low
            return False

        def rec(node: int, entry: int, visited: int, count: int) -> bool:
            self.tick()
            exit_port = 1 - entry
            if count == n:
                return (0, 0) in self.closing[node][exit_port]
            unvisited = full & ~visited
            if dead_end(unvisited, node):
                return False
            if self.reach(node, unvisited) != unvisited:
                return False
            for nb, p in self.pg.out[node][exit_port]:
                if visited >> nb & 1:
                    continue
                steps.append((nb, p))
                if rec(nb, p, visited | 1 << nb, count + 1):
                    return True
                steps.pop()
            return False

        return steps if rec(0, 0, 1, 1) else None

    # closed Hamilton path ---------------------------------------------------

    def hamilton_path(self) -> Optional[list[tuple[int, int]]]:
        n = self.n
        full = (1 << n) - 1
        steps: list[tuple[int, int]] = []

        def rec(node: int, entry: int, visited: int, count: int) -> bool:
            self.tick()
            if count == n:
                return True
            unvisited = full & ~visited
            if self.reach(node, unvisited) != unvisited:
                return False
            for nb, p in self.pg.out[node][1 - entry]:
                if visited >> nb & 1:
                    continue
                steps.append((nb, p))
                if rec(nb, p, visited | 1 << nb, count + 1):
                    return True
                steps.pop()
            return False

        for start in range(n):
            for entry in (0, 1):
                steps[:] = [(start, entry)]
                if rec(start, entry, 1 << start, 1):
                    return steps
        return None

    # longest structures -----------------------------------------------------

    def longest_cycle(self) -> Optional[list[tuple[int, int]]]:
        n = self.n
        best: list[Optional[list[tuple[int, int]]]] = [None]
        best_len = [1]
        steps: list[tuple[int, int]] = []

        def rec(start: int, node: int, entry: int, visited: int, count: int, allowed: int) -> None:
            self.tick()
            exit_port = 1 - entry
            if count >= 2 and count > best_len[0] and (start, 0) in self.closing[node][exit_port]:
                best_len[0] = count
                best[0] = list(steps)
            if best_len[0] == n:
                return
            free = allowed & ~visited
            if count + bin(self.reach(node, free)).count("1") <= best_len[0]:
                return
            for nb, p in self.pg.out[node][exit_port]:
                if not free >> nb & 1:
                    continue
                steps.append((nb, p))
                rec(start, nb, p, visited | 1 << nb, count + 1, allowed)
                steps.pop()
                if best_len[0] == n:
                    return

        for start in range(n):
            if n - start <= best_len[0]:
                break
            allowed = ((1 << n) - 1) & ~((1 << start) - 1)
            steps[:] = [(start, 0)]
            rec(start, start, 0, 1 << start, 1, allowed)
        return best[0]

    def longest_path(self) -> list[tuple[int, int]]:
        n = self.n
        full = (1 << n) - 1
        best = [[(0, 0)]]
        steps: list[tuple[int, int]] = []

        def rec(node: int, entry: int, visited: int, count: int) -> None:
            self.tick()
            if count > len(best[0]):
                best[0] = list(steps)
            if len(best[0]) == n:
                return
            free = full & ~visited
            if count + bin(self.reach(node, free)).count("1") <= len(best[0]):
                return
            for nb, p in self.pg.out[node][1 - entry]:
                if visited >> nb & 1:
                    continue
                steps.append((nb, p))
                rec(nb, p, visited | 1 << nb, count + 1)
                steps.pop()
                if len(best[0]) == n:
                    return

        for start in range(n):
            for entry in (0, 1):
                steps[:] = [(start, entry)]
                rec(start, entry, 1 << start, 1)
                if len(best[0]) == n:
                    return best[0]
        return best[0]

    # enumeration ------------------------------------------------------------

    def closed_paths(self, allowed: int) -> Iterator[list[tuple[int, int]]]:
        """All closed paths inside ``allowed`` nodes, each direction separately."""
        steps: list[tuple[int, int]] = []

        def rec(node: int, entry: int, visited: int) -> Iterator[list[tuple[int, int]]]:
            self.tick()
            yield steps
            for nb, p in self.pg.out[node][1 - entry]:
                if visited >> nb & 1 or not allowed >> nb & 1:
                    continue
                steps.append((nb, p))
                yield from rec(nb, p, visited | 1 << nb)
                steps.pop()

        for start in range(self.n):
            if not allowed >> start & 1:
                continue
            for entry in (0, 1):
                steps[:] = [(start, entry)]
                yield from rec(start, entry, 1 << start)

    def cycles(self) -> Iterator[list[tuple[int, int]]]:
        """Every alternating cycle exactly once: least node first, entered at port 0."""
        n = self.n
        steps: list[tuple[int, int]] = []

        def rec(start: int, node: int, entry: int, visited: int) -> Iterator[list[tuple[int, int]]]:
            self.tick()
            exit_port = 1 - entry
            if len(steps) >= 2 and (start, 0) in self.closing[node][exit_port]:
                yield steps
            for nb, p in self.pg.out[node][exit_port]:
                if nb <= start or visited >> nb & 1:
                    continue
                steps.append((nb, p))
                yield from rec(start, nb, p, visited | 1 << nb)
                steps.pop()

        for start in range(n):
            steps[:] = [(start, 0)]
            yield from rec(start, start, 0, 1 << start)

    def reachable_pairs(self) -> set[tuple[int, int]]:
        pg = self.pg
        pairs: set[tuple[int, int]] = set()
        for start in range(self.n):
            for entry in (0, 1):
                first = pg.ports[start][entry]
                seen: set[tuple[int, int, int]] = set()
                stack = [(start, entry, 1 << start)]
                while stack:
                    node, ent, visited = stack.pop()
                    if (visited, node, ent) in seen:
                        continue
                    seen.add((visited, node, ent))
                    self.tick()
                    last = pg.ports[node][1 - ent]
                    pairs.add((min(first, last), max(first, last)))
                    for nb, p in pg.out[node][1 - ent]:
                        if not visited >> nb & 1:
                            stack.append((nb, p, visited | 1 << nb))
        return pairs


# --- public searches ---------------------------------------------------------

def find_alt_hamilton_cycle(g: Graph, m: Matching, budget: int = DEFAULT_BUDGET) -> Optional[AlternatingWalk]:
    """An M-alternating Hamilton cycle, or None when none exists.

    Raises NotApplicable for two vertices and SearchBudgetExceeded when the
    search cannot decide within ``budget`` node expansions.
    """
    pg = contract(g, m)
    if pg.num_nodes < 2:
        raise NotApplicable("a two-vertex graph has no cycles")
    steps = _Searcher(pg, budget).hamilton_cycle()
    if steps is None:
        return None
    return AlternatingWalk.build(m, canonical_cycle(pg.expand(steps)), CYCLE)


def find_closed_alt_hamilton_path(g: Graph, m: Matching, budget: int = DEFAULT_BUDGET) -> Optional[AlternatingWalk]:
    pg = contract(g, m)
    steps = _Searcher(pg, budget).hamilton_path()
    if steps is None:
        return None
    return AlternatingWalk.build(m, pg.expand(steps), CLOSED_PATH)


def longest_alt_cycle(g: Graph, m: Matching, budget: int = DEFAULT_BUDGET) -> Optional[AlternatingWalk]:
    """A maximum-length alternating cycle (branch and bound), or None."""
    pg = contract(g, m)
    steps = _Searcher(pg, budget).longest_cycle()
    if steps is None:
        return None
    return AlternatingWalk.build(m, canonical_cycle(pg.expand(steps)), CYCLE)


def longest_closed_alt_path(g: Graph, m: Matching, budget: int = DEFAULT_BUDGET) -> AlternatingWalk:
    pg = contract(g, m)
    steps = _Searcher(pg, budget).longest_path()
    return AlternatingWalk.build(m, pg.expand(steps), CLOSED_PATH)


def iter_alt_cycles(g: Graph, m: Matching, budget: int = DEFAULT_BUDGET) -> Iterator[AlternatingWalk]:
    pg = contract(g, m)
    for steps in _Searcher(pg, budget).cycles():
        yield AlternatingWalk.build(m, canonical_cycle(pg.expand(steps)), CYCLE)


def iter_closed_alt_paths(g: Graph, m: Matching, avoid: Sequence[int] = (),
                          budget: int = DEFAULT_BUDGET) -> Iterator[AlternatingWalk]:
    """Every closed alternating path avoiding ``avoid``, each once.

    Of a path and its reversal only the one starting at the smaller
    endpoint is produced.
    """
    pg = contract(g, m)
    blocked = {pg.locate[v][0] for v in avoid}
    allowed = sum(1 << i for i in range(pg.num_nodes) if i not in blocked)
    for steps in _Searcher(pg, budget).closed_paths(allowed):
        vs = pg.expand(steps)
        if vs[0] < vs[-1]:
            yield AlternatingWalk.build(m, vs, CLOSED_PATH)


def alt_reachable_pairs(g: Graph, m: Matching, budget: int = DEFAULT_BUDGET) -> set[tuple[int, int]]:
    """Unordered pairs ``(x, y)``, ``x < y``, joined by some closed alternating path."""
    return _Searcher(contract(g, m), budget).reachable_pairs()


# --- lemma validators ----------------------------------------------------------

def _pair_bound_holds(g: Graph, pairs, v: int, w: int, bound: int) -> bool:
    for a, b in pairs:
        e = sum(g.has_edge(x, y) for x in (a, b) for y in (v, w))
        if e > bound:
            return False
    return True


def _outside_path_ends(g: Graph, m: Matching, inner: AlternatingWalk, p: AlternatingWalk) -> tuple[int, int]:
    problems = walk_problems(g, m, p.vertices, CLOSED_PATH)
    if problems or p.shape != CLOSED_PATH:
        raise InvalidWalk(f"outside path is not a closed alternating path: {problems}")
    if set(p.vertices) & set(inner.vertices):
        raise InvalidWalk("outside path meets the given walk")
    return p.endpoints


def validate_lemma13(g: Graph, m: Matching, c: AlternatingWalk, p: AlternatingWalk) -> bool:
    """Edge bound between a longest alternating cycle and an outside closed path.

    For each unmatched edge ``ab`` of ``c`` and the ends ``v, w`` of ``p``:
    at most one edge joins ``{a, b}`` to ``{v, w}`` in a bipartite graph,
    at most two otherwise. That ``c`` is longest is the caller's claim.
    """
    problems = walk_problems(g, m, c.vertices, CYCLE)
    if problems or c.shape != CYCLE:
        raise InvalidWalk(f"not an alternating cycle: {problems}")
    v, w = _outside_path_ends(g, m, c, p)
    bound = 1 if is_bipartite(g) else 2
    return _pair_bound_holds(g, c.unmatched_edges(), v, w, bound)


def validate_lemma14(g: Graph, m: Matching, p: AlternatingWalk, q: AlternatingWalk) -> bool:
    """Same bound with a longest closed path ``p`` in place of the cycle."""
    problems = walk_problems(g, m, p.vertices, CLOSED_PATH)
    if problems or p.shape != CLOSED_PATH:
        raise InvalidWalk(f"not a closed alternating path: {problems}")
    v, w = _outside_path_ends(g, m, p, q)
    bound = 1 if is_bipartite(g) else 2
    return _pair_bound_holds(g, p.unmatched_edges(), v, w, bound)
