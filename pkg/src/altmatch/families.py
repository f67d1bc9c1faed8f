"""Generators for the extremal families and standard graphs, plus a recogniser."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .graph import Graph
from .matching import Matching, enum_perfect_matchings


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def gen_g1(n: int) -> tuple[Graph, Matching]:
    """Two copies of K_{2n+1} joined by the matching x_i y_i.

    x_1..x_{2n+1} get ids 0..2n and y_1..y_{2n+1} get 2n+1..4n+1.
    Returns the graph and its jointing matching.
    """
    if n < 1:
        raise ValueError(f"g1 needs n >= 1, got {n}")
    k = 2 * n + 1
    edges = list(combinations(range(k), 2))
    edges += [(k + i, k + j) for i, j in combinations(range(k), 2)]
    joint = [(i, k + i) for i in range(k)]
    g = Graph(2 * k, edges + joint)
    return g, Matching.of(g, joint)


def gen_remark_tight(t: int) -> tuple[Graph, Matching]:
    """Bipartite graph one short of the degree-sum bound, with a bad matching.

    Blocks K_{t,t} on (U0, V0) and (U1, V1), then u joined to V0 and V1,
    v joined to U0 and U1, and the edge uv. Ids run U0, V0, U1, V1, u, v.
    The matching pairs U_i[j] with V_i[j] and adds uv.
    """
    if t < 1:
        raise ValueError(f"remark family needs t >= 1, got {t}")
    u0 = list(range(0, t))
    v0 = list(range(t, 2 * t))
    u1 = list(range(2 * t, 3 * t))
    v1 = list(range(3 * t, 4 * t))
    u, v = 4 * t, 4 * t + 1
    edges = [(a, b) for a in u0 for b in v0] + [(a, b) for a in u1 for b in v1]
    edges += [(b, u) for b in v0 + v1] + [(a, v) for a in u0 + u1] + [(u, v)]
    g = Graph(4 * t + 2, edges)
    pairs = list(zip(u0, v0)) + list(zip(u1, v1)) + [(u, v)]
    return g, Matching.of(g, pairs)


def recognize_g1(g: Graph) -> Optional[tuple[int, Matching]]:
    """Return ``(n, jointing matching)`` if ``g`` is the member of G1 of its order.

    Intra-clique edges of K_{2n+1} lie in 2n-1 triangles, jointing edges
    in none; the heavy edges must split the graph into two (2n+1)-cliques
    whose cross edges form a perfect matching.
    """
    nu = g.n
    if nu < 6 or nu % 4 != 2:
        return None
    n = (nu - 2) // 4
    k = 2 * n + 1
    if any(len(a) != k for a in g.adj):
        return None
    heavy: list[list[int]] = [[] for _ in range(nu)]
    for a, b in g.edges():
        if bin(g.adj_mask[a] & g.adj_mask[b]).count("1") >= 2 * n - 1:
            heavy[a].append(b)
            heavy[b].append(a)
    side = [-1] * nu
    parts = []
    for root in range(nu):
        if side[root] != -1:
            continue
        side[root] = len(parts)
        members = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            for y in heavy[x]:
                if side[y] == -1:
                    side[y] = side[root]
                    members.append(y)
                    stack.append(y)
        parts.append(members)
    if len(parts) != 2 or any(len(p) != k for p in parts):
        return None
    for part in parts:
        if any(not g.has_edge(a, b) for a, b in combinations(part, 2)):
            return None
    cross = [(a, b) for a, b in g.edges() if side[a] != side[b]]
    try:
        joint = Matching.of(g, cross)
    except ValueError:
        return None
    if not joint.is_perfect:
        return None
    return n, joint


def jointing_matchings(g: Graph) -> list[Matching]:
    """Perfect matchings of a G1 graph using no intra-clique edge (brute force)."""
    found = recognize_g1(g)
    if found is None:
        return []
    _, joint = found
    clique = {0} | {w for w in g.adj[0] if joint.mate[0] != w}
    return [pm for pm in enum_perfect_matchings(g)
            if all((a in clique) != (b in clique) for a, b in pm.edges)]


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def build(self) -> tuple[Graph, Optional[Matching]]:
        p = self.params
        if self.family == "g1":
            return gen_g1(p["n"])
        if self.family == "remark":
            return gen_remark_tight(p["t"])
        if self.family == "kb":
            g = complete_bipartite(p["a"], p["b"])
        elif self.family == "k":
            g = complete_graph(p["n"])
        elif self.family == "cycle":
            g = cycle_graph(p["n"])
        else:
            raise ValueError(f"unknown family {self.family!r}")
        return g, next(enum_perfect_matchings(g), None)


_FAMILY_PARAMS = {"g1": {"n"}, "remark": {"t"}, "kb": {"a", "b"}, "k": {"n"}, "cycle": {"n"}}


def parse_family(text: str) -> FamilySpec:
    """Parse strings such as ``g1:n=2``, ``remark:t=1`` or ``kb:a=3,b=3``."""
    match = re.fullmatch(r"\s*(\w+)\s*:\s*(.*)", text)
    if not match:
        raise ValueError(f"bad family spec {text!r}")
    name, body = match.group(1), match.group(2)
    if name not in _FAMILY_PARAMS:
        raise ValueError(f"unknown family {name!r}")
    params = {}
    for item in filter(None, (s.strip() for s in body.split(","))):
        key, _, value = item.partition("=")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise ValueError(f"bad parameter {item!r} in {text!r}") from None
    if set(params) != _FAMILY_PARAMS[name]:
        raise ValueError(f"{name} expects parameters {sorted(_FAMILY_PARAMS[name])}")
    if any(v < 1 for v in params.values()):
        raise ValueError(f"family parameters must be positive: {text!r}")
    return FamilySpec(name, params)
