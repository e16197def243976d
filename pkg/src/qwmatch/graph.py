"""
Symmetric graphs with sorted-neighbor edge maps.

A :class:`Graph` is the directed version of a simple undirected graph: every
edge ``{u, v}`` contributes the two arcs ``(u, v)`` and ``(v, u)``. The coin
degrees of freedom of a vertex ``v`` are the positions ``0..d(v)-1`` in its
ascending neighbor list, and the walker Hilbert space is laid out flat, one
contiguous block of ``d(v)`` amplitudes per vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

__all__ = [
    "GraphError",
    "EdgeState",
    "Graph",
    "build_graph",
    "eta",
    "sigma",
    "edge_state_index",
    "edge_state_from_index",
]


class GraphError(ValueError):
    """Raised for malformed edge lists and invalid edge-state queries."""


class EdgeState(NamedTuple):
    """Basis state ``|vertex, coin>`` of the walker space."""

    vertex: int
    coin: int


@dataclass(frozen=True, eq=False)
class Graph:
    """
    Immutable symmetric simple graph on vertices ``0..vertex_count-1``.

    Attributes
    ----------
    vertex_count : int
        Number of vertices.
    neighbor_lists : tuple of tuple of int
        Strictly increasing neighbor ids per vertex.
    degree_offsets : ndarray of int
        Length ``vertex_count + 1`` prefix sums of degrees; vertex ``v`` owns
        flat indices ``degree_offsets[v]:degree_offsets[v + 1]``.
    """

    vertex_count: int
    neighbor_lists: tuple[tuple[int, ...], ...]
    degree_offsets: np.ndarray

    def __post_init__(self) -> None:
        self.degree_offsets.setflags(write=False)

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.degree_offsets)

    @property
    def dimension(self) -> int:
        """Number of directed edges, i.e. the dimension of the walker space."""
        return int(self.degree_offsets[-1])

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.vertex_count else 0

    @cached_property
    def state_vertex(self) -> np.ndarray:
        """Owning vertex of every flat index."""
        out = np.repeat(np.arange(self.vertex_count), self.degrees)
        out.setflags(write=False)
        return out

    @cached_property
    def state_neighbor(self) -> np.ndarray:
        """``eta(v, c)`` for every flat index ``(v, c)``."""
        out = np.fromiter(
            (u for nbrs in self.neighbor_lists for u in nbrs), dtype=np.int64, count=self.dimension
        )
        out.setflags(write=False)
        return out

    def degree(self, v: int) -> int:
        return len(self.neighbor_lists[v])

    def block(self, v: int) -> slice:
        """Flat slice holding the coin amplitudes of vertex ``v``."""
        return slice(int(self.degree_offsets[v]), int(self.degree_offsets[v + 1]))

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u, nbrs in enumerate(self.neighbor_lists) for v in nbrs if u < v]

    def adjacency(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix."""
        a = np.zeros((self.vertex_count, self.vertex_count), dtype=bool)
        for u, nbrs in enumerate(self.neighbor_lists):
            a[u, list(nbrs)] = True
        return a

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbor_lists[u]
        i = int(np.searchsorted(nbrs, v))
        return i < len(nbrs) and nbrs[i] == v

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, edges={self.dimension // 2})"


def build_graph(edge_list: Iterable[tuple[int, int]], vertex_count: int | None = None) -> Graph:
    """
    Build a :class:`Graph` from unordered vertex pairs.

    Parameters
    ----------
    edge_list : iterable of (int, int)
        Distinct undirected edges. Vertex ids must be dense, ``0..n-1``.
    vertex_count : int, optional
        Number of vertices. Inferred as ``max id + 1`` when omitted.

    Raises
    ------
    GraphError
        On self-loops, duplicate edges, out-of-range ids or isolated vertices.
    """
    pairs = [(int(u), int(v)) for u, v in edge_list]
    if vertex_count is None:
        vertex_count = 1 + max((max(p) for p in pairs), default=-1)
    n = int(vertex_count)

    nbrs: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex id out of range in edge ({u}, {v}); expected 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
        nbrs[u].append(v)
        nbrs[v].append(u)

    isolated = [v for v in range(n) if not nbrs[v]]
    if isolated:
        raise GraphError(f"isolated vertices (degree 0): {isolated}")

    neighbor_lists = tuple(tuple(sorted(x)) for x in nbrs)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum([len(x) for x in neighbor_lists], out=offsets[1:])
    return Graph(n, neighbor_lists, offsets)


def eta(g: Graph, v: int, c: int) -> int:
    """The ``c``-th smallest-labeled neighbor of ``v``."""
    if not 0 <= c < g.degree(v):
        raise GraphError(f"coin {c} out of range for vertex {v} of degree {g.degree(v)}")
    return g.neighbor_lists[v][c]


def sigma(g: Graph, u: int, v: int) -> int:
    """
    Coin index of ``u`` within ``N(v)``.

    The arc ``(u, v)`` lands on ``|v, sigma(u, v)>`` under the flip-flop shift,
    so ``eta(g, v, sigma(g, u, v)) == u``.
    """
    nbrs = g.neighbor_lists[v]
    i = int(np.searchsorted(nbrs, u))
    if i == len(nbrs) or nbrs[i] != u:
        raise GraphError(f"({u}, {v}) is not an edge")
    return i


def edge_state_index(g: Graph, s: EdgeState | tuple[int, int]) -> int:
    v, c = s
    if not 0 <= v < g.vertex_count:
        raise GraphError(f"vertex {v} out of range")
    if not 0 <= c < g.degree(v):
        raise GraphError(f"coin {c} out of range for vertex {v} of degree {g.degree(v)}")
    return int(g.degree_offsets[v]) + c


def edge_state_from_index(g: Graph, index: int) -> EdgeState:
    """Inverse of :func:`edge_state_index`."""
    if not 0 <= index < g.dimension:
        raise GraphError(f"flat index {index} out of range 0..{g.dimension - 1}")
    v = int(np.searchsorted(g.degree_offsets, index, side="right")) - 1
    return EdgeState(v, index - int(g.degree_offsets[v]))
