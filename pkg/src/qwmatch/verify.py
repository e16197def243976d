"""
Numerical checks for the matched quantum walk.

Everything here recomputes from scratch what :mod:`qwmatch.quantum` does with
structured operations: the shift and coin are materialized as dense matrices
and multiplied out, and the quantum vertex marginals are compared against an
independently evolved classical trajectory.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np
import scipy.linalg

from .classical import ScheduleError, StochasticSchedule, validate_schedule
from .graph import Graph
from .orthonormal import OrthonormalizationError
from .quantum import (
    BuildConfig,
    CoinConstructionError,
    CoinOperator,
    ShiftPermutation,
    build_shift,
    closed_form_state,
    matched_walk,
    vertex_probabilities,
)

__all__ = [
    "Tolerances",
    "MatchReport",
    "check_unitary",
    "dense_shift",
    "dense_coin",
    "dense_oracle",
    "run_matched",
]


@dataclass(frozen=True)
class Tolerances:
    deviation: float = 1e-9
    unitarity: float = 1e-12
    norm: float = 1e-10
    closed_form: float = 1e-10
    oracle: float = 1e-12
    dense_limit: int = 512


def check_unitary(m) -> float:
    """Largest entry of ``|M^H M - I|`` and ``|M M^H - I|``."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.size == 0:
        return 0.0
    eye = np.eye(m.shape[0])
    mh = m.conj().T
    return float(max(np.abs(mh @ m - eye).max(), np.abs(m @ mh - eye).max()))


def dense_shift(shift: ShiftPermutation) -> np.ndarray:
    """0/1 matrix ``S`` with ``S[perm[i], i] = 1``."""
    n = len(shift.permutation)
    s = np.zeros((n, n))
    s[shift.permutation, np.arange(n)] = 1.0
    return s


def dense_coin(coin: CoinOperator) -> np.ndarray:
    return scipy.linalg.block_diag(*coin.blocks).astype(np.complex128)


def dense_oracle(g: Graph, shift: ShiftPermutation, coin: CoinOperator, psi) -> np.ndarray:
    """``S @ W @ psi`` with both operators materialized."""
    if g.dimension > 0 and dense_coin(coin).shape != (g.dimension, g.dimension):
        raise ValueError("coin does not match the graph dimension")
    return dense_shift(shift) @ (dense_coin(coin) @ np.asarray(psi, dtype=np.complex128))


@dataclass
class MatchReport:
    """
    Outcome of :func:`run_matched`.

    ``max_abs_deviation`` is the largest ``|mu(v, t) - pi_v(t)|`` over the run;
    ``per_step_deviation[t]`` the same maximum restricted to time ``t``.
    ``oracle_worst`` is ``None`` when the graph exceeds the dense size limit.
    """

    horizon: int
    max_abs_deviation: float = 0.0
    per_step_deviation: list[float] = field(default_factory=list)
    unitarity_worst: float = 0.0
    norm_worst: float = 0.0
    closed_form_worst: float = 0.0
    oracle_worst: float | None = None
    shift_involution: bool = True
    coin_blocks_checked: int = 0
    errors: list[str] = field(default_factory=list)
    tolerances: dict = field(default_factory=dict)
    passed: bool = False

    def evaluate(self, tol: Tolerances) -> bool:
        self.tolerances = asdict(tol)
        self.passed = (
            not self.errors
            and len(self.per_step_deviation) == self.horizon + 1
            and self.shift_involution
            and self.max_abs_deviation <= tol.deviation
            and self.unitarity_worst <= tol.unitarity
            and self.norm_worst <= tol.norm
            and self.closed_form_worst <= tol.closed_form
            and (self.oracle_worst is None or self.oracle_worst <= tol.oracle)
        )
        return self.passed

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def run_matched(
    g: Graph,
    schedule: StochasticSchedule,
    pi0,
    steps: int,
    cfg: BuildConfig = BuildConfig(),
    tol: Tolerances = Tolerances(),
    trajectory: list | None = None,
) -> MatchReport:
    """
    Build the matched walk for ``steps`` steps and certify it.

    Parameters
    ----------
    trajectory : list, optional
        If given, each :class:`~qwmatch.quantum.MatchedStep` is appended to it.

    Notes
    -----
    Construction failures (schedule exhaustion, norm mismatch in a coin block,
    dependent Gram-Schmidt input) are recorded in ``errors`` and end the run
    with ``passed = False``.
    """
    report = MatchReport(horizon=steps)
    validation = validate_schedule(schedule, g, steps)
    if not validation.valid:
        report.errors.extend(
            f"schedule t={v.t} column={v.column} {v.kind} {v.amount!r}" for v in validation.violations
        )
        report.evaluate(tol)
        return report

    shift = build_shift(g)
    report.shift_involution = shift.is_involution()
    use_dense = g.dimension <= tol.dense_limit
    if use_dense:
        report.oracle_worst = 0.0
        report.unitarity_worst = check_unitary(dense_shift(shift))

    prev = None
    try:
        for rec in matched_walk(g, schedule, pi0, steps, cfg, shift):
            mu = vertex_probabilities(rec.psi, g)
            dev = float(np.max(np.abs(mu - rec.pi)))
            report.per_step_deviation.append(dev)
            report.max_abs_deviation = max(report.max_abs_deviation, dev)
            report.norm_worst = max(report.norm_worst, abs(float(np.linalg.norm(rec.psi)) - 1.0))

            if prev is not None:
                closed = closed_form_state(g, prev.transition, prev.pi)
                report.closed_form_worst = max(
                    report.closed_form_worst, float(np.max(np.abs(rec.psi - closed)))
                )
                if use_dense:
                    dense = dense_oracle(g, shift, prev.coin, prev.psi)
                    report.oracle_worst = max(report.oracle_worst, float(np.max(np.abs(rec.psi - dense))))

            if rec.coin is not None:
                for w in rec.coin.blocks:
                    report.unitarity_worst = max(report.unitarity_worst, check_unitary(w))
                report.coin_blocks_checked += len(rec.coin.blocks)
            if trajectory is not None:
                trajectory.append(rec)
            prev = rec
    except (CoinConstructionError, OrthonormalizationError, ScheduleError) as exc:
        report.errors.append(f"{type(exc).__name__}: {exc}")

    report.evaluate(tol)
    return report
