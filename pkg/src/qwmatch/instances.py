"""Built-in demo walks and seeded random instances."""

from __future__ import annotations

import heapq
from itertools import combinations

import numpy as np

from .classical import StochasticSchedule, random_column_stochastic, uniform_walk_matrix
from .graph import Graph, build_graph

__all__ = ["DEMOS", "demo_instance", "generate_instance", "random_tree_edges"]


def random_tree_edges(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Uniform random labeled tree on ``n >= 2`` vertices, decoded from a Prüfer sequence."""
    if n == 2:
        return [(0, 1)]
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def generate_instance(
    seed: int, n: int, mode: str = "nonhomogeneous"
) -> tuple[Graph, StochasticSchedule, np.ndarray]:
    """
    Seeded random connected graph, schedule and initial distribution.

    The graph is a uniform spanning tree of ``K_n`` plus a random number
    (``0..n``) of extra edges; transition columns are flat Dirichlet draws over
    each neighborhood, fixed for ``mode="homogeneous"`` and redrawn every step
    for ``mode="nonhomogeneous"``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if mode not in ("homogeneous", "nonhomogeneous"):
        raise ValueError(f"unknown mode {mode!r}")
    rng = np.random.default_rng(seed)
    edges = {tuple(sorted(e)) for e in random_tree_edges(n, rng)}
    spare = [e for e in combinations(range(n), 2) if e not in edges]
    k = min(len(spare), int(rng.integers(0, n + 1)))
    if k:
        for i in rng.choice(len(spare), size=k, replace=False):
            edges.add(spare[i])
    g = build_graph(sorted(edges), n)

    if mode == "homogeneous":
        schedule = StochasticSchedule.homogeneous(random_column_stochastic(g, rng))
    else:
        schedule = StochasticSchedule.random(g, int(rng.integers(0, 2**31)))
    pi0 = rng.dirichlet(np.ones(n))
    return g, schedule, pi0


def _point_mass(n: int, v: int = 0) -> np.ndarray:
    pi = np.zeros(n)
    pi[v] = 1.0
    return pi


def _cycle4():
    g = build_graph([(0, 1), (1, 2), (2, 3), (3, 0)])
    return g, StochasticSchedule.homogeneous(uniform_walk_matrix(g)), _point_mass(4)


def _k3():
    g = build_graph([(0, 1), (1, 2), (0, 2)])
    return g, StochasticSchedule.homogeneous(uniform_walk_matrix(g)), _point_mass(3)


def _path5_biased():
    # interior vertices step right with 0.7, left with 0.3; endpoints must bounce
    g = build_graph([(0, 1), (1, 2), (2, 3), (3, 4)])
    p = np.zeros((5, 5))
    p[1, 0] = 1.0
    p[3, 4] = 1.0
    for u in (1, 2, 3):
        p[u + 1, u] = 0.7
        p[u - 1, u] = 0.3
    return g, StochasticSchedule.homogeneous(p), _point_mass(5, 2)


DEMOS = {"cycle4": _cycle4, "k3": _k3, "path5-lazy": _path5_biased}


def demo_instance(name: str) -> tuple[Graph, StochasticSchedule, np.ndarray]:
    try:
        return DEMOS[name]()
    except KeyError:
        raise ValueError(f"unknown demo {name!r}; choose from {sorted(DEMOS)}") from None
