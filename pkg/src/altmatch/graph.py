"""Simple undirected graphs on vertices 0..n-1 and their basic invariants."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex ids."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph.

    Adjacency is kept both as sorted neighbour tuples and as bitmasks;
    the searchers work on the masks.
    """

    __slots__ = ("n", "adj", "adj_mask", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.adj_mask = tuple(sum(1 << w for w in s) for s in nbrs)
        self._edges = tuple(sorted((u, v) for u in range(n) for v in nbrs[u] if u < v))
        self._hash = hash((n, self._edges))

    @classmethod
    def from_adjacency_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = list(masks)
        n = len(masks)
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj_mask[u] >> v & 1)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min(len(a) for a in self.adj)

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def delete_vertices(self, removed: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on the surviving vertices, relabelled 0..k-1.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        gone = set(removed)
        keep = [v for v in range(self.n) if v not in gone]
        if not keep:
            raise GraphError("cannot delete every vertex")
        index = {v: i for i, v in enumerate(keep)}
        sub = Graph(len(keep), ((index[u], index[v]) for u, v in self._edges
                                if u in index and v in index))
        return sub, keep

    def delete_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        gone = {_norm(u, v) for u, v in removed}
        return Graph(self.n, (e for e in self._edges if e not in gone))

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self._edges))


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


@dataclass(frozen=True)
class Bipartition:
    """Two-colouring: ``side[v]`` is 0 for part A and 1 for part B."""

    side: tuple[int, ...]

    @property
    def part_a(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == 0)

    @property
    def part_b(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == 1)

    def certifies(self, g: Graph) -> bool:
        return len(self.side) == g.n and all(self.side[u] != self.side[v] for u, v in g.edges())


def bipartition(g: Graph) -> Optional[Bipartition]:
    """BFS two-colouring, or None if the graph has an odd cycle."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return Bipartition(tuple(side))


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def reachable_mask(g: Graph, start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    adj = g.adj_mask
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return reachable_mask(g, 0, full) == full


@dataclass(frozen=True)
class CutCertificate:
    """Witness for a connectivity value.

    ``complete`` marks a complete graph (no separating set exists);
    otherwise ``cut`` lists vertices whose deletion disconnects the graph.
    """

    cut: tuple[int, ...] = ()
    complete: bool = False

    def verify(self, g: Graph, kappa: int) -> bool:
        if self.complete:
            return g.is_complete() and kappa == g.n - 1
        if len(self.cut) != kappa or len(set(self.cut)) != kappa:
            return False
        if kappa >= g.n - 1:
            return False
        rest, _ = g.delete_vertices(self.cut)
        return not is_connected(rest)


def _local_vertex_connectivity(g: Graph, s: int, t: int) -> tuple[int, list[int]]:
    """Max number of internally disjoint s-t paths for non-adjacent s, t.

    Unit-capacity augmenting paths on the split digraph: vertex v becomes
    v_in = 2v -> v_out = 2v+1 with capacity 1 (infinite for s and t).
    Returns the flow value and a minimum separating vertex set.
    """
    n = g.n
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, big)
        add(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    # residual-reachable side: v is cut iff v_in reached and v_out not
    cut = [v for v in range(n) if 2 * v in parent and 2 * v + 1 not in parent]
    return flow, cut


@lru_cache(maxsize=4096)
def vertex_connectivity(g: Graph) -> tuple[int, CutCertificate]:
    """Vertex connectivity with a certificate.

    Complete graphs get ``kappa = n - 1`` and the complete marker. Otherwise
    kappa is the minimum local connectivity over non-adjacent pairs, and
    the certificate is a separating set of that size.
    """
    if g.is_complete():
        return g.n - 1, CutCertificate(complete=True)
    if not is_connected(g):
        return 0, CutCertificate(cut=())
    best: Optional[tuple[int, list[int]]] = None
    for s, t in combinations(range(g.n), 2):
        if g.has_edge(s, t):
            continue
        value, cut = _local_vertex_connectivity(g, s, t)
        if best is None or value < best[0]:
            best = (value, cut)
    assert best is not None
    return best[0], CutCertificate(cut=tuple(sorted(best[1])))


def connectivity(g: Graph) -> int:
    return vertex_connectivity(g)[0]
