"""
Coined quantum walk whose vertex probabilities follow a given random walk.

The walker lives on the flat edge-state space of a :class:`~qwmatch.graph.Graph`.
With all phases set to zero the state at time ``t > 0`` has amplitude

    psi(v, c) = sqrt(p_vu(t-1)) * sqrt(pi_u(t-1)),   u = eta(v, c),

and each step applies a per-vertex coin ``W_v(t)`` that rotates the incoming
block of ``v`` onto the outgoing block ``phi_v`` (entries
``sqrt(p_uv(t)) * sqrt(pi_v(t))``), followed by the flip-flop shift that sends
the arc ``(v, u)`` to ``(u, v)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np
from numpy.typing import NDArray

from .classical import StochasticSchedule, check_distribution, step
from .graph import Graph
from .orthonormal import ZETA_TOL, gram_schmidt, li_set

__all__ = [
    "CoinConstructionError",
    "BuildConfig",
    "ShiftPermutation",
    "CoinOperator",
    "MatchedStep",
    "build_shift",
    "initial_state",
    "closed_form_state",
    "target_phi",
    "extract_vertex_block",
    "coin_block",
    "build_coin",
    "qw_step",
    "vertex_probabilities",
    "matched_walk",
]


class CoinConstructionError(ValueError):
    """Incoming and outgoing vertex blocks carry different probability."""


@dataclass(frozen=True)
class BuildConfig:
    """
    Knobs of the coin construction.

    Attributes
    ----------
    phase_convention : {"zero"}
        All phases are zero, so every amplitude is real and nonnegative.
    gs_tolerance : float
        Residual threshold in Gram-Schmidt; also the block norm at or below
        which a vertex is treated as carrying no probability.
    degenerate_policy : {"identity"}
        Coin block used for vertices with no probability.
    zeta_tolerance : float
        Entries of a normalized block at or below this count as zero.
    norm_tolerance : float
        Allowed gap between the squared norms of the incoming and outgoing
        block of a vertex.
    """

    phase_convention: str = "zero"
    gs_tolerance: float = 1e-12
    degenerate_policy: str = "identity"
    zeta_tolerance: float = ZETA_TOL
    norm_tolerance: float = 1e-10

    def __post_init__(self) -> None:
        if self.phase_convention != "zero":
            raise ValueError(f"unsupported phase convention {self.phase_convention!r}")
        if self.degenerate_policy != "identity":
            raise ValueError(f"unsupported degenerate policy {self.degenerate_policy!r}")
        if not (self.gs_tolerance > 0 and self.zeta_tolerance > 0 and self.norm_tolerance > 0):
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True, eq=False)
class ShiftPermutation:
    """Edge-state permutation: amplitude at flat index ``i`` moves to ``permutation[i]``."""

    permutation: NDArray[np.int64]

    def __post_init__(self) -> None:
        self.permutation.setflags(write=False)

    def apply(self, psi: NDArray) -> NDArray:
        out = np.empty_like(psi)
        out[self.permutation] = psi
        return out

    def is_involution(self) -> bool:
        return bool(np.array_equal(self.permutation[self.permutation], np.arange(len(self.permutation))))


@dataclass(frozen=True, eq=False)
class CoinOperator:
    """
    Block-diagonal coin ``W = sum_v |v><v| (x) W_v``.

    Attributes
    ----------
    blocks : tuple of ndarray
        ``d(v) x d(v)`` complex unitary per vertex.
    offsets : ndarray
        Flat start index of each vertex block (the graph's ``degree_offsets``).
    t : int or None
        Time step the coin was built for.
    """

    blocks: tuple[NDArray[np.complex128], ...]
    offsets: NDArray[np.int64]
    t: int | None = None

    def apply(self, psi: NDArray) -> NDArray[np.complex128]:
        out = np.empty(len(psi), dtype=np.complex128)
        for v, w in enumerate(self.blocks):
            lo, hi = self.offsets[v], self.offsets[v + 1]
            out[lo:hi] = w @ psi[lo:hi]
        return out

    @classmethod
    def identity(cls, g: Graph, t: int | None = None) -> "CoinOperator":
        blocks = tuple(np.eye(d, dtype=np.complex128) for d in g.degrees)
        return cls(blocks, g.degree_offsets, t)


def build_shift(g: Graph) -> ShiftPermutation:
    """Flip-flop shift: ``|v, c> -> |eta(v, c), sigma(v, eta(v, c))>``."""
    perm = np.empty(g.dimension, dtype=np.int64)
    for v, nbrs in enumerate(g.neighbor_lists):
        base = int(g.degree_offsets[v])
        for c, u in enumerate(nbrs):
            # position of v in N(u)
            perm[base + c] = int(g.degree_offsets[u]) + int(np.searchsorted(g.neighbor_lists[u], v))
    return ShiftPermutation(perm)


def initial_state(g: Graph, pi0) -> NDArray[np.complex128]:
    """Uniform coin superposition: ``psi(v, c) = sqrt(pi_v / d(v))``."""
    pi0 = check_distribution(pi0, g.vertex_count)
    amp = np.sqrt(pi0 / g.degrees)
    return np.repeat(amp, g.degrees).astype(np.complex128)


def closed_form_state(g: Graph, p_prev, pi_prev) -> NDArray[np.complex128]:
    """
    Closed-form state after a step with transition matrix ``p_prev`` taken
    from distribution ``pi_prev``.

    Amplitude on ``|v, c>`` is ``sqrt(p_vu) * sqrt(pi_u)`` with ``u = eta(v, c)``.
    """
    p_prev = np.asarray(p_prev, dtype=float)
    pi_prev = np.asarray(pi_prev, dtype=float)
    v, u = g.state_vertex, g.state_neighbor
    return (np.sqrt(p_prev[v, u]) * np.sqrt(pi_prev[u])).astype(np.complex128)


def target_phi(g: Graph, v: int, p_t, pi_t) -> NDArray[np.complex128]:
    """Outgoing block of ``v``: entry ``c`` is ``sqrt(p_uv) * sqrt(pi_v)``, ``u = eta(v, c)``."""
    nbrs = list(g.neighbor_lists[v])
    p_t = np.asarray(p_t, dtype=float)
    return (np.sqrt(p_t[nbrs, v]) * np.sqrt(float(pi_t[v]))).astype(np.complex128)


def extract_vertex_block(psi, g: Graph, v: int) -> NDArray:
    return np.asarray(psi)[g.block(v)]


def coin_block(psi_v, phi_v, dim: int | None = None, cfg: BuildConfig = BuildConfig()) -> NDArray[np.complex128]:
    """
    Unitary ``W_v = sum_k |alpha_k><beta_k|`` rotating ``psi_v`` onto ``phi_v``.

    ``beta`` is the orthonormal completion of ``psi_v / |psi_v|`` and ``alpha``
    that of ``phi_v / |phi_v|``, both via :func:`li_set` and
    :func:`gram_schmidt`, paired index by index.

    Raises
    ------
    CoinConstructionError
        If ``| |psi_v|^2 - |phi_v|^2 | > cfg.norm_tolerance``.
    """
    psi_v = np.asarray(psi_v, dtype=np.complex128).ravel()
    phi_v = np.asarray(phi_v, dtype=np.complex128).ravel()
    if dim is None:
        dim = psi_v.shape[0]
    if psi_v.shape != (dim,) or phi_v.shape != (dim,):
        raise ValueError(f"blocks of shape {psi_v.shape} and {phi_v.shape} do not match dimension {dim}")

    n_psi = np.linalg.norm(psi_v)
    n_phi = np.linalg.norm(phi_v)
    if abs(n_psi**2 - n_phi**2) > cfg.norm_tolerance:
        raise CoinConstructionError(
            f"incoming probability {n_psi**2!r} differs from outgoing {n_phi**2!r}"
        )
    if n_psi <= cfg.gs_tolerance or n_phi <= cfg.gs_tolerance:
        return np.eye(dim, dtype=np.complex128)

    beta = gram_schmidt(li_set(psi_v / n_psi, dim, cfg.zeta_tolerance), cfg.gs_tolerance)
    alpha = gram_schmidt(li_set(phi_v / n_phi, dim, cfg.zeta_tolerance), cfg.gs_tolerance)
    return np.column_stack(alpha) @ np.column_stack(beta).conj().T


def build_coin(
    g: Graph, psi, p_t, pi_t, cfg: BuildConfig = BuildConfig(), t: int | None = None
) -> CoinOperator:
    """Coin for one step: per vertex, rotate the current block onto :func:`target_phi`."""
    psi = np.asarray(psi)
    mu = vertex_probabilities(psi, g)
    gap = float(np.max(np.abs(mu - np.asarray(pi_t)))) if g.vertex_count else 0.0
    if gap > cfg.norm_tolerance:
        raise CoinConstructionError(f"wavefunction deviates from pi(t) by {gap:.3g}")
    blocks = []
    for v in range(g.vertex_count):
        sl = g.block(v)
        blocks.append(coin_block(psi[sl], target_phi(g, v, p_t, pi_t), g.degree(v), cfg))
    return CoinOperator(tuple(blocks), g.degree_offsets, t)


def qw_step(g: Graph, psi, shift: ShiftPermutation, coin: CoinOperator) -> NDArray[np.complex128]:
    """``S W psi``."""
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape != (g.dimension,):
        raise ValueError(f"wavefunction has shape {psi.shape}, expected ({g.dimension},)")
    return shift.apply(coin.apply(psi))


def vertex_probabilities(psi, g: Graph) -> NDArray[np.float64]:
    """``mu_v = sum_c |psi(v, c)|^2``."""
    rho = np.abs(np.asarray(psi)) ** 2
    return np.add.reduceat(rho, g.degree_offsets[:-1]) if g.vertex_count else rho[:0]


@dataclass(frozen=True, eq=False)
class MatchedStep:
    """Walker state at time ``t`` and the coin that advances it (``None`` at the horizon)."""

    t: int
    pi: NDArray[np.float64]
    psi: NDArray[np.complex128]
    coin: CoinOperator | None
    transition: NDArray[np.float64] | None


def matched_walk(
    g: Graph,
    schedule: StochasticSchedule,
    pi0,
    steps: int,
    cfg: BuildConfig = BuildConfig(),
    shift: ShiftPermutation | None = None,
) -> Iterator[MatchedStep]:
    """
    Co-evolve the random walk and its matching quantum walk.

    Yields ``steps + 1`` :class:`MatchedStep` records for ``t = 0..steps``.
    """
    shift = build_shift(g) if shift is None else shift
    pi = check_distribution(pi0, g.vertex_count)
    psi = initial_state(g, pi)
    for t in range(steps):
        p_t = schedule(t)
        coin = build_coin(g, psi, p_t, pi, cfg, t)
        yield MatchedStep(t, pi, psi, coin, p_t)
        psi = qw_step(g, psi, shift, coin)
        pi = step(p_t, pi)
    yield MatchedStep(steps, pi, psi, None, None)
