"""
Possibly non-homogeneous random walks ``pi(t+1) = P(t) pi(t)``.

Transition matrices are dense ``n x n`` arrays indexed ``P[v, u] = p_vu``, the
probability of moving from ``u`` to ``v``; columns sum to one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .graph import Graph

__all__ = [
    "STOCHASTIC_TOL",
    "ScheduleError",
    "Violation",
    "ValidationReport",
    "StochasticSchedule",
    "check_distribution",
    "random_column_stochastic",
    "uniform_walk_matrix",
    "validate_schedule",
    "step",
    "evolve",
    "stationary_distribution",
]

STOCHASTIC_TOL = 1e-12


class ScheduleError(ValueError):
    """Invalid transition matrices, distributions, or an exhausted schedule."""


def check_distribution(pi, n: int | None = None, tol: float = STOCHASTIC_TOL) -> np.ndarray:
    """Return ``pi`` as a float array, raising unless it is a probability vector."""
    p = np.asarray(pi, dtype=float)
    if p.ndim != 1:
        raise ScheduleError(f"probability vector must be 1-D, got shape {p.shape}")
    if n is not None and p.shape[0] != n:
        raise ScheduleError(f"probability vector has length {p.shape[0]}, expected {n}")
    if not np.all(np.isfinite(p)) or np.any(p < 0):
        raise ScheduleError("probability vector has negative or non-finite entries")
    if abs(p.sum() - 1.0) > tol:
        raise ScheduleError(f"probability vector sums to {p.sum()!r}, not 1")
    return p


def random_column_stochastic(g: Graph, rng: np.random.Generator) -> np.ndarray:
    """Column-stochastic matrix with support exactly on the adjacency of ``g``.

    Each column ``u`` is a flat Dirichlet draw over ``N(u)``.
    """
    n = g.vertex_count
    m = np.zeros((n, n))
    for u, nbrs in enumerate(g.neighbor_lists):
        m[list(nbrs), u] = rng.dirichlet(np.ones(len(nbrs)))
    return m


def uniform_walk_matrix(g: Graph) -> np.ndarray:
    """Simple random walk: ``p_vu = 1/d(u)`` for every neighbor ``v`` of ``u``."""
    n = g.vertex_count
    m = np.zeros((n, n))
    for u, nbrs in enumerate(g.neighbor_lists):
        m[list(nbrs), u] = 1.0 / len(nbrs)
    return m


@dataclass(frozen=True, eq=False)
class StochasticSchedule:
    """
    Time-indexed transition matrices.

    Use the constructors :meth:`homogeneous`, :meth:`sequence` and
    :meth:`generator` rather than instantiating directly.

    Attributes
    ----------
    mode : {"homogeneous", "sequence", "generator"}
    matrices : tuple of ndarray
        One matrix for ``homogeneous``, the explicit list for ``sequence``,
        empty for ``generator``.
    rule : callable, optional
        ``rule(t) -> ndarray`` for ``generator`` mode. Must be deterministic.
    meta : dict
        Serializable description of the rule (e.g. ``{"kind": "random", "seed": 3}``).
    """

    mode: str
    matrices: tuple[np.ndarray, ...] = ()
    rule: Callable[[int], np.ndarray] | None = None
    meta: dict = field(default_factory=dict)

    @classmethod
    def homogeneous(cls, matrix) -> "StochasticSchedule":
        m = np.array(matrix, dtype=float)
        m.setflags(write=False)
        return cls("homogeneous", (m,))

    @classmethod
    def sequence(cls, matrices: Sequence) -> "StochasticSchedule":
        ms = []
        for m in matrices:
            m = np.array(m, dtype=float)
            m.setflags(write=False)
            ms.append(m)
        return cls("sequence", tuple(ms))

    @classmethod
    def generator(cls, rule: Callable[[int], np.ndarray], **meta) -> "StochasticSchedule":
        return cls("generator", (), rule, dict(meta))

    @classmethod
    def random(cls, g: Graph, seed: int) -> "StochasticSchedule":
        """Fresh Dirichlet column fill at every step, reproducible per ``(seed, t)``."""

        def rule(t: int) -> np.ndarray:
            return random_column_stochastic(g, np.random.default_rng([seed, t]))

        return cls.generator(rule, kind="random", seed=int(seed))

    @property
    def horizon(self) -> int | None:
        """Number of steps available, ``None`` when unbounded."""
        return len(self.matrices) if self.mode == "sequence" else None

    def __call__(self, t: int) -> np.ndarray:
        """The transition matrix ``P(t)``."""
        if t < 0:
            raise ScheduleError(f"negative time {t}")
        if self.mode == "homogeneous":
            return self.matrices[0]
        if self.mode == "sequence":
            if t >= len(self.matrices):
                raise ScheduleError(
                    f"schedule exhausted: P({t}) requested but only {len(self.matrices)} matrices given"
                )
            return self.matrices[t]
        if self.mode == "generator":
            return np.asarray(self.rule(t), dtype=float)
        raise ScheduleError(f"unknown schedule mode {self.mode!r}")


class Violation(NamedTuple):
    """One failed check. ``amount`` is ``1 - column sum`` for ``kind == "sum"``
    and the offending entry otherwise."""

    t: int
    column: int
    kind: str
    amount: float


@dataclass
class ValidationReport:
    horizon: int
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def raise_if_invalid(self) -> None:
        if self.violations:
            head = "; ".join(
                f"t={v.t} column={v.column} {v.kind} {v.amount:.3g}" for v in self.violations[:5]
            )
            more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
            raise ScheduleError(f"invalid schedule: {head}{more}")


def validate_schedule(
    s: StochasticSchedule, g: Graph, horizon: int, tol: float = STOCHASTIC_TOL
) -> ValidationReport:
    """
    Check column-stochasticity and adjacency support of ``P(0..horizon-1)``.

    Violations are collected rather than raised. Kinds are ``"shape"``,
    ``"exhausted"``, ``"range"`` (entry outside ``[0, 1]``), ``"adjacency"``
    (positive mass on a non-edge) and ``"sum"`` (column sum off by more than
    ``tol``; amount is ``1 - sum``).
    """
    report = ValidationReport(horizon)
    n = g.vertex_count
    allowed = g.adjacency()
    for t in range(horizon):
        try:
            p = s(t)
        except ScheduleError:
            report.violations.append(Violation(t, -1, "exhausted", float("nan")))
            break
        if p.shape != (n, n):
            report.violations.append(Violation(t, -1, "shape", float("nan")))
            continue
        for u in range(n):
            col = p[:, u]
            bad = np.flatnonzero(~np.isfinite(col) | (col < 0) | (col > 1))
            for v in bad:
                report.violations.append(Violation(t, u, "range", float(col[v])))
            stray = np.flatnonzero((col > 0) & ~allowed[:, u])
            for v in stray:
                report.violations.append(Violation(t, u, "adjacency", float(col[v])))
            deficit = 1.0 - float(col.sum())
            if not abs(deficit) <= tol:
                report.violations.append(Violation(t, u, "sum", deficit))
    return report


def step(p_t, pi) -> np.ndarray:
    """One step of the walk: ``pi'_v = sum_u p_vu pi_u``."""
    p_t = np.asarray(p_t, dtype=float)
    pi = np.asarray(pi, dtype=float)
    if p_t.ndim != 2 or p_t.shape[0] != p_t.shape[1] or p_t.shape[1] != pi.shape[0]:
        raise ScheduleError(f"dimension mismatch: P is {p_t.shape}, pi has length {pi.shape[0]}")
    return p_t @ pi


def evolve(s: StochasticSchedule, pi0, steps: int) -> list[np.ndarray]:
    """Trajectory ``[pi(0), ..., pi(steps)]``."""
    traj = [check_distribution(pi0)]
    for t in range(steps):
        traj.append(step(s(t), traj[-1]))
    return traj


def stationary_distribution(p) -> np.ndarray:
    """Normalized eigenvector of ``p`` for the eigenvalue closest to one."""
    w, vecs = np.linalg.eig(np.asarray(p, dtype=float))
    k = int(np.argmin(np.abs(w - 1.0)))
    v = np.real(vecs[:, k])
    return v / v.sum()
