import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qwmatch import (
    BuildConfig,
    CoinConstructionError,
    CoinOperator,
    StochasticSchedule,
    build_coin,
    build_shift,
    check_unitary,
    coin_block,
    edge_state_index,
    evolve,
    extract_vertex_block,
    initial_state,
    closed_form_state,
    qw_step,
    sigma,
    stationary_distribution,
    step,
    target_phi,
    uniform_walk_matrix,
    vertex_probabilities,
)

from conftest import connected_graphs, random_schedule_matrix

S = np.sqrt


def test_shift_c4(c4):
    shift = build_shift(c4)
    assert shift.permutation[edge_state_index(c4, (0, 0))] == edge_state_index(c4, (1, 0))
    assert shift.permutation[edge_state_index(c4, (1, 0))] == edge_state_index(c4, (0, 0))
    assert shift.is_involution()


def test_shift_k3(k3):
    shift = build_shift(k3)
    assert shift.permutation[edge_state_index(k3, (0, 1))] == edge_state_index(k3, (2, 0))


@given(connected_graphs())
def test_shift_is_flip_flop_involution(g):
    perm = build_shift(g).permutation
    assert sorted(perm) == list(range(g.dimension))
    assert np.array_equal(perm[perm], np.arange(g.dimension))
    for v in range(g.vertex_count):
        for c, u in enumerate(g.neighbor_lists[v]):
            assert perm[edge_state_index(g, (v, c))] == edge_state_index(g, (u, sigma(g, v, u)))


def test_initial_state(k3, c4):
    psi = initial_state(k3, [1, 0, 0])
    assert np.allclose(psi, [1 / S(2), 1 / S(2), 0, 0, 0, 0], atol=0)
    assert np.allclose(initial_state(c4, np.full(4, 0.25)), np.full(8, 1 / S(8)), atol=1e-16)
    psi = initial_state(c4, [0, 0, 1, 0])
    assert np.flatnonzero(psi).tolist() == [4, 5]


def test_closed_form_state_c4(c4):
    p = uniform_walk_matrix(c4)
    psi = closed_form_state(c4, p, [1, 0, 0, 0])
    expected = np.zeros(8)
    expected[edge_state_index(c4, (1, sigma(c4, 0, 1)))] = S(0.5)
    expected[edge_state_index(c4, (3, sigma(c4, 0, 3)))] = S(0.5)
    assert np.array_equal(psi, expected)
    assert np.allclose(vertex_probabilities(psi, c4), step(p, [1, 0, 0, 0]), atol=1e-15)


def test_closed_form_state_fixed_point(k3):
    p = uniform_walk_matrix(k3)
    star = stationary_distribution(p)
    psi = closed_form_state(k3, p, star)
    assert np.allclose(vertex_probabilities(psi, k3), star, atol=1e-15)
    assert abs(np.linalg.norm(psi) - 1) <= 1e-12


@given(connected_graphs(), st.integers(0, 2**32 - 1))
def test_closed_form_state_unit_norm(g, seed):
    rng = np.random.default_rng(seed)
    p = random_schedule_matrix(g, rng, zero_prob=0.3)
    pi = rng.dirichlet(np.ones(g.vertex_count))
    psi = closed_form_state(g, p, pi)
    assert abs(np.linalg.norm(psi) - 1) <= 1e-12
    assert np.allclose(vertex_probabilities(psi, g), step(p, pi), atol=1e-15)


def test_target_phi(k3):
    from qwmatch import build_graph

    path = build_graph([(0, 1)])
    p = np.array([[0, 1], [1, 0.0]])
    assert np.allclose(target_phi(path, 0, p, [0.25, 0.75]), [0.5])
    assert np.array_equal(target_phi(k3, 1, uniform_walk_matrix(k3), [1, 0, 0]), [0, 0])
    assert np.allclose(target_phi(k3, 0, uniform_walk_matrix(k3), [1, 0, 0]), [S(0.5), S(0.5)])


@given(connected_graphs(), st.integers(0, 2**32 - 1))
def test_target_phi_g_normalization(g, seed):
    rng = np.random.default_rng(seed)
    p = random_schedule_matrix(g, rng, zero_prob=0.3)
    pi = rng.dirichlet(np.ones(g.vertex_count))
    for v in range(g.vertex_count):
        phi = target_phi(g, v, p, pi)
        if pi[v] > 0:
            assert abs(np.sum(np.abs(phi / S(pi[v])) ** 2) - 1) <= 1e-12


def test_extract_vertex_block(k3):
    psi = initial_state(k3, [1, 0, 0])
    assert np.allclose(extract_vertex_block(psi, k3, 0), [1 / S(2), 1 / S(2)])
    assert np.array_equal(extract_vertex_block(psi, k3, 1), [0, 0])
    assert np.array_equal(np.concatenate([extract_vertex_block(psi, k3, v) for v in range(3)]), psi)


def test_coin_block_trivial():
    assert np.array_equal(coin_block([0.5], [0.5], 1), [[1]])


def test_coin_block_identity_when_unchanged():
    psi = np.array([0.3, 0.4, 0.5])
    w = coin_block(psi, psi, 3)
    assert np.allclose(w @ psi, psi, atol=1e-15)
    assert check_unitary(w) <= 1e-12


def test_coin_block_degenerate():
    assert np.array_equal(coin_block(np.zeros(3), np.zeros(3), 3), np.eye(3))


def test_coin_block_norm_mismatch():
    with pytest.raises(CoinConstructionError):
        coin_block([0.5, 0.5], [0.5, 0.6], 2)


def test_coin_block_c4_t1(c4):
    p = uniform_walk_matrix(c4)
    pi0 = np.array([1.0, 0, 0, 0])
    pi1 = step(p, pi0)
    psi = closed_form_state(c4, p, pi0)
    psi_v = extract_vertex_block(psi, c4, 1)
    phi_v = target_phi(c4, 1, p, pi1)
    assert np.allclose(psi_v, [S(0.5), 0]) and np.allclose(phi_v, [0.5, 0.5])
    w = coin_block(psi_v, phi_v, 2)
    assert np.linalg.norm(w @ psi_v - phi_v) <= 1e-12
    assert check_unitary(w) <= 1e-12


def test_build_coin_point_mass(k3):
    p = uniform_walk_matrix(k3)
    p[:, 1] = [0.8, 0, 0.2]
    psi = initial_state(k3, [0, 1, 0])
    coin = build_coin(k3, psi, p, [0, 1, 0])
    assert np.array_equal(coin.blocks[0], np.eye(2))
    assert np.array_equal(coin.blocks[2], np.eye(2))
    assert not np.allclose(coin.blocks[1], np.eye(2))
    assert np.allclose(coin.blocks[1] @ psi[2:4], [S(0.8), S(0.2)], atol=1e-15)


def test_build_coin_c4_unitary(c4):
    pi0 = np.full(4, 0.25)
    psi = initial_state(c4, pi0)
    coin = build_coin(c4, psi, uniform_walk_matrix(c4), pi0)
    assert len(coin.blocks) == 4
    for w in coin.blocks:
        assert w.shape == (2, 2)
        assert check_unitary(w) <= 1e-12


def test_build_coin_rejects_mismatched_state(k3):
    with pytest.raises(CoinConstructionError):
        build_coin(k3, initial_state(k3, [1, 0, 0]), uniform_walk_matrix(k3), [0, 1, 0])


@given(connected_graphs(), st.integers(0, 2**32 - 1))
def test_coin_preserves_vertex_probabilities(g, seed):
    rng = np.random.default_rng(seed)
    p = random_schedule_matrix(g, rng, zero_prob=0.3)
    pi = rng.dirichlet(np.ones(g.vertex_count))
    psi = initial_state(g, pi)
    coin = build_coin(g, psi, p, pi)
    assert np.max(np.abs(vertex_probabilities(coin.apply(psi), g) - vertex_probabilities(psi, g))) <= 1e-12


def test_qw_step_identity_coin_permutes(c4):
    psi = np.arange(8, dtype=complex) / np.linalg.norm(np.arange(8))
    shift = build_shift(c4)
    out = qw_step(c4, psi, shift, CoinOperator.identity(c4))
    assert np.array_equal(out[shift.permutation], psi)


def test_qw_step_c4_matches_classical(c4):
    p = uniform_walk_matrix(c4)
    pi0 = np.array([1.0, 0, 0, 0])
    psi0 = initial_state(c4, pi0)
    psi1 = qw_step(c4, psi0, build_shift(c4), build_coin(c4, psi0, p, pi0))
    assert np.allclose(vertex_probabilities(psi1, c4), [0, 0.5, 0, 0.5], atol=1e-15)
    assert np.max(np.abs(psi1 - closed_form_state(c4, p, pi0))) <= 1e-10
    assert abs(np.linalg.norm(psi1) - 1) <= 1e-12


@given(connected_graphs(), st.integers(0, 2**32 - 1), st.integers(1, 6))
def test_matching_and_closed_form(g, seed, steps):
    rng = np.random.default_rng(seed)
    ps = [random_schedule_matrix(g, rng, zero_prob=0.3) for _ in range(steps)]
    pi0 = np.zeros(g.vertex_count)
    pi0[rng.integers(g.vertex_count)] = 1.0
    traj = evolve(StochasticSchedule.sequence(ps), pi0, steps)
    shift = build_shift(g)
    psi = initial_state(g, pi0)
    for t in range(steps):
        psi = qw_step(g, psi, shift, build_coin(g, psi, ps[t], traj[t]))
        assert np.max(np.abs(vertex_probabilities(psi, g) - traj[t + 1])) <= 1e-10
        assert np.max(np.abs(psi - closed_form_state(g, ps[t], traj[t]))) <= 1e-10
        assert abs(np.linalg.norm(psi) - 1) <= 1e-10


def test_vertex_probabilities(k3, c4):
    assert np.allclose(vertex_probabilities(initial_state(k3, [1, 0, 0]), k3), [1, 0, 0])
    assert np.allclose(vertex_probabilities(np.full(8, 1 / S(8)), c4), np.full(4, 0.25))


def test_build_config_validation():
    with pytest.raises(ValueError):
        BuildConfig(gs_tolerance=0)
    with pytest.raises(ValueError):
        BuildConfig(phase_convention="random")
