"""Matchings: the Matching type, Edmonds' blossom algorithm and enumerators."""

from __future__ import annotations

from collections import deque
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

from .formats import FormatError, PathLike, format_matching, parse_matching_pairs
from .graph import Graph


class MatchingError(ValueError):
    """Edge set is not a (perfect) matching of the host graph."""


class Matching:
    """A set of pairwise disjoint edges of a graph on ``n`` vertices.

    ``mate[v]`` is the partner of ``v`` or None when uncovered.
    """

    __slots__ = ("n", "edges", "mate")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]]):
        mate: list[Optional[int]] = [None] * n
        edges = []
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise MatchingError(f"bad pair ({u}, {v}) for n={n}")
            if mate[u] is not None or mate[v] is not None:
                raise MatchingError(f"pair ({u}, {v}) shares a vertex with another pair")
            mate[u], mate[v] = v, u
            edges.append((min(u, v), max(u, v)))
        self.n = n
        self.edges = tuple(sorted(edges))
        self.mate = tuple(mate)

    @classmethod
    def of(cls, g: Graph, pairs: Iterable[tuple[int, int]]) -> "Matching":
        """Build a matching and check every pair is an edge of ``g``."""
        m = cls(g.n, pairs)
        for u, v in m.edges:
            if not g.has_edge(u, v):
                raise MatchingError(f"({u}, {v}) is not an edge of the graph")
        return m

    @classmethod
    def from_mate(cls, mate: Sequence[Optional[int]]) -> "Matching":
        return cls(len(mate), ((u, v) for u, v in enumerate(mate) if v is not None and u < v))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        u, v = edge
        return 0 <= u < self.n and self.mate[u] == v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Matching({list(self.edges)})"

    @property
    def is_perfect(self) -> bool:
        return all(p is not None for p in self.mate)

    def partner(self, v: int) -> Optional[int]:
        return self.mate[v]

    def is_matching_of(self, g: Graph) -> bool:
        return self.n == g.n and all(g.has_edge(u, v) for u, v in self.edges)


def require_perfect(g: Graph, m: Matching) -> None:
    if not m.is_matching_of(g):
        raise MatchingError("matching does not belong to the graph")
    if not m.is_perfect:
        raise MatchingError("matching is not perfect")


def _blossom(n: int, adj: Sequence[Sequence[int]], match: list[int]) -> list[int]:
    """Edmonds' cardinality matching, improving ``match`` in place.

    ``match[v] == -1`` marks an exposed vertex. Each phase grows an
    alternating forest from one exposed root, shrinking odd cycles by
    relabelling their vertices with a common base.
    """
    base = list(range(n))
    parent = [-1] * n
    used = [False] * n
    in_blossom = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root: int) -> int:
        for i in range(n):
            used[i] = False
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    for i in range(n):
                        in_blossom[i] = False
                    mark_path(v, cur, to)
                    mark_path(to, cur, v)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for root in range(n):
        if match[root] != -1:
            continue
        v = find_path(root)
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v] = pv
            match[pv] = v
            v = ppv
    return match


def _greedy(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    match = [-1] * n
    for u in range(n):
        if match[u] == -1:
            for w in adj[u]:
                if match[w] == -1:
                    match[u], match[w] = w, u
                    break
    return match


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching (blossom algorithm)."""
    match = _blossom(g.n, g.adj, _greedy(g.n, g.adj))
    return Matching(g.n, ((u, w) for u, w in enumerate(match) if w > u))


def matching_number(g: Graph, removed: int = 0) -> int:
    """Size of a maximum matching of ``g`` minus the vertices in bitmask ``removed``."""
    keep = [v for v in range(g.n) if not removed >> v & 1]
    index = {v: i for i, v in enumerate(keep)}
    adj = [[index[w] for w in g.adj[v] if w in index] for v in keep]
    match = _blossom(len(keep), adj, _greedy(len(keep), adj))
    return sum(1 for w in match if w != -1) // 2


def has_perfect_matching(g: Graph, removed: int = 0) -> bool:
    remaining = g.n - bin(removed).count("1")
    if remaining % 2:
        return False
    return 2 * matching_number(g, removed) == remaining


def enum_perfect_matchings(g: Graph) -> Iterator[Matching]:
    """Every perfect matching once, in lexicographic order of the mate array.

    Backtracks on the lowest uncovered vertex, trying partners in
    ascending order.
    """
    n = g.n
    if n % 2:
        return
    mate: list[Optional[int]] = [None] * n

    def rec(free: int) -> Iterator[Matching]:
        if not free:
            yield Matching.from_mate(mate)
            return
        low = free & -free
        v = low.bit_length() - 1
        options = g.adj_mask[v] & free
        while options:
            bit = options & -options
            w = bit.bit_length() - 1
            mate[v], mate[w] = w, v
            yield from rec(free & ~low & ~bit)
            mate[v] = mate[w] = None
            options ^= bit

    yield from rec((1 << n) - 1)


def enum_k_matchings(g: Graph, k: int) -> Iterator[Matching]:
    """Every matching with exactly ``k`` edges, lexicographic by sorted edge list."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    edges = g.edges()
    chosen: list[tuple[int, int]] = []

    def rec(start: int, covered: int) -> Iterator[Matching]:
        if len(chosen) == k:
            yield Matching(g.n, chosen)
            return
        if g.n - bin(covered).count("1") < 2 * (k - len(chosen)):
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            if covered >> u & 1 or covered >> v & 1:
                continue
            chosen.append((u, v))
            yield from rec(i + 1, covered | 1 << u | 1 << v)
            chosen.pop()

    yield from rec(0, 0)


def read_matching(path: PathLike, g: Graph, perfect: bool = True) -> Matching:
    """Read a matching file and validate it against ``g``.

    Errors name the offending line.
    """
    pairs = parse_matching_pairs(Path(path).read_text(), g)
    m = Matching(g.n, pairs)
    if perfect and not m.is_perfect:
        missing = [v for v, p in enumerate(m.mate) if p is None]
        raise FormatError(f"matching is not perfect; uncovered vertices {missing}")
    return m


def write_matching(m: Matching, path: PathLike) -> None:
    Path(path).write_text(format_matching(m.edges))
