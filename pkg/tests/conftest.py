import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qwmatch import build_graph

settings.register_profile(
    "default", derandomize=True, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def k3():
    return build_graph([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def c4():
    return build_graph([(0, 1), (1, 2), (2, 3), (3, 0)])


@st.composite
def connected_graphs(draw, min_n=2, max_n=9):
    """Random tree (each vertex attaches to an earlier one) plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    spare = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if spare:
        edges |= set(draw(st.lists(st.sampled_from(spare), unique=True, max_size=len(spare))))
    return build_graph(sorted(edges), n)


def random_schedule_matrix(g, rng, zero_prob=0.0):
    """Column-stochastic matrix on the adjacency of g; entries zeroed with probability zero_prob."""
    n = g.vertex_count
    p = np.zeros((n, n))
    for u, nbrs in enumerate(g.neighbor_lists):
        w = rng.random(len(nbrs))
        w[rng.random(len(nbrs)) < zero_prob] = 0.0
        if not w.any():
            w[rng.integers(len(nbrs))] = 1.0
        p[list(nbrs), u] = w / w.sum()
    return p


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
