"""Generated instance suites shared by the constructor and acceptance tests."""

import random

from altmatch.graph import Graph
from altmatch.matching import Matching


def dense_instance(nu, rng, p=0.62):
    """Random graph with a planted perfect matching where every pair of
    vertices has degree sum >= nu - 1 (which covers every alternating-reachable
    pair, so the closed Hamilton path theorem applies)."""
    while True:
        perm = list(range(nu))
        rng.shuffle(perm)
        m_pairs = [tuple(sorted(perm[i:i + 2])) for i in range(0, nu, 2)]
        chosen = set(m_pairs)
        for u in range(nu):
            for v in range(u + 1, nu):
                if rng.random() < p:
                    chosen.add((u, v))
        g = Graph(nu, chosen)
        low = sorted(g.degree(v) for v in range(nu))
        if low[0] + low[1] >= nu - 1:
            return g, Matching.of(g, m_pairs)


def dense_suite(count=60, seed=20240611):
    rng = random.Random(seed)
    return [dense_instance(rng.choice((16, 18, 20)), rng) for _ in range(count)]
