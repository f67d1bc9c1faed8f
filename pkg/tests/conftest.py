import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from altmatch.graph import Graph
from altmatch.matching import Matching

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, b in zip(pairs, bits) if b])


@st.composite
def matched_graphs(draw, min_nu=2, max_nu=8, density=None):
    """A graph that contains a planted random perfect matching, plus that matching."""
    nu = 2 * draw(st.integers(min_nu // 2, max_nu // 2))
    perm = draw(st.permutations(range(nu)))
    m_pairs = [tuple(sorted(perm[i:i + 2])) for i in range(0, nu, 2)]
    pairs = [(u, v) for u in range(nu) for v in range(u + 1, nu) if (u, v) not in m_pairs]
    if density is None:
        bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        seed = draw(st.integers(0, 2**32 - 1))
        rng = random.Random(seed)
        bits = [rng.random() < density for _ in pairs]
    g = Graph(nu, m_pairs + [p for p, b in zip(pairs, bits) if b])
    return g, Matching.of(g, m_pairs)


@pytest.fixture
def k4():
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    return g, Matching.of(g, [(0, 1), (2, 3)])


def pytest_terminal_summary(terminalreporter):
    import acceptance_log
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_log.LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
