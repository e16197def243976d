import pytest
from hypothesis import given

from qwmatch import GraphError, build_graph, edge_state_from_index, edge_state_index, eta, sigma
from qwmatch.graph import EdgeState

from conftest import connected_graphs


def test_k3_neighbors(k3):
    assert k3.neighbor_lists == ((1, 2), (0, 2), (0, 1))
    assert list(k3.degree_offsets) == [0, 2, 4, 6]


def test_c4_dimension(c4):
    assert list(c4.degrees) == [2, 2, 2, 2]
    assert c4.dimension == 8


@pytest.mark.parametrize(
    "edges, n, match",
    [
        ([(0, 0)], None, "self-loop"),
        ([(0, 1), (1, 0)], None, "duplicate"),
        ([(0, 1), (0, 1)], None, "duplicate"),
        ([(0, 1)], 3, "isolated"),
        ([(0, 5)], 3, "out of range"),
        ([(-1, 0)], 2, "out of range"),
    ],
)
def test_build_graph_rejects(edges, n, match):
    with pytest.raises(GraphError, match=match):
        build_graph(edges, n)


def test_eta(k3, c4):
    assert eta(k3, 0, 0) == 1
    assert eta(k3, 0, 1) == 2
    assert eta(c4, 0, 1) == 3
    with pytest.raises(GraphError):
        eta(k3, 0, 2)


def test_sigma(k3, c4):
    assert sigma(k3, 1, 0) == 0
    assert sigma(k3, 2, 0) == 1
    assert sigma(c4, 3, 0) == 1
    with pytest.raises(GraphError):
        sigma(c4, 2, 0)


def test_edge_state_index(k3, c4):
    assert edge_state_index(k3, (0, 0)) == 0
    assert edge_state_index(k3, (1, 1)) == 3
    assert edge_state_index(k3, EdgeState(2, 0)) == 4
    assert edge_state_from_index(k3, 3) == (1, 1)
    assert edge_state_index(c4, (3, 1)) == 7
    with pytest.raises(GraphError):
        edge_state_index(k3, (0, 2))
    with pytest.raises(GraphError):
        edge_state_from_index(k3, 6)


@given(connected_graphs())
def test_graph_invariants(g):
    assert g.dimension == 2 * len(g.edges())
    for v, nbrs in enumerate(g.neighbor_lists):
        assert v not in nbrs
        assert all(a < b for a, b in zip(nbrs, nbrs[1:]))
        for u in nbrs:
            assert v in g.neighbor_lists[u]
            assert eta(g, v, sigma(g, u, v)) == u
        for c in range(len(nbrs)):
            for c2 in range(len(nbrs)):
                if c != c2:
                    assert (eta(g, v, c) < eta(g, v, c2)) == (c < c2)


@given(connected_graphs())
def test_index_round_trip(g):
    for i in range(g.dimension):
        assert edge_state_index(g, edge_state_from_index(g, i)) == i
    for v in range(g.vertex_count):
        for c in range(g.degree(v)):
            assert edge_state_from_index(g, edge_state_index(g, (v, c))) == (v, c)
    assert [eta(g, *edge_state_from_index(g, i)) for i in range(g.dimension)] == list(g.state_neighbor)
