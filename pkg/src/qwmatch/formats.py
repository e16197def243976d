"""
Reading edge lists and walk specs; writing trajectories and operator dumps.

Edge list
    One ``u v`` pair per line, whitespace separated; ``#`` starts a comment.
    Labels are arbitrary tokens. They are mapped to ids ``0..n-1`` in sorted
    order (numeric when every label is an integer, lexicographic otherwise),
    and that order is the neighbor order of the walk.

Walk spec (JSON)
    ``mode`` is ``"homogeneous"`` (key ``matrix``), ``"sequence"`` (key
    ``matrices``) or ``"generator"`` (key ``generator``, currently only
    ``{"kind": "random", "seed": <int>}``). Matrices are column-major: a list
    of columns, column ``u`` holding the probabilities of leaving vertex ``u``
    for every vertex in id order. ``initial`` is the dense starting
    distribution in id order.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .classical import StochasticSchedule, check_distribution
from .graph import Graph, build_graph
from .quantum import CoinOperator, MatchedStep, ShiftPermutation, vertex_probabilities

__all__ = [
    "FormatError",
    "parse_edge_list",
    "read_edge_list",
    "parse_walk_spec",
    "read_walk_spec",
    "trajectory_rows",
    "write_trajectory_csv",
    "operator_dump",
]


class FormatError(ValueError):
    """Malformed edge list or walk spec."""


def _label_key(labels: set[str]):
    try:
        ints = {s: int(s) for s in labels}
    except ValueError:
        return sorted(labels)
    return sorted(labels, key=ints.__getitem__)


def parse_edge_list(text: str) -> tuple[Graph, list[str]]:
    """Parse edge-list text. Returns the graph and the label of each vertex id."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        pairs.append((tokens[0], tokens[1]))
    labels = _label_key({x for p in pairs for x in p})
    ids = {s: i for i, s in enumerate(labels)}
    try:
        g = build_graph([(ids[a], ids[b]) for a, b in pairs], len(labels))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return g, labels


def read_edge_list(path) -> tuple[Graph, list[str]]:
    return parse_edge_list(Path(path).read_text())


def _matrix(columns, n: int, what: str) -> np.ndarray:
    m = np.asarray(columns, dtype=float)
    if m.shape != (n, n):
        raise FormatError(f"{what}: expected {n} columns of length {n}, got shape {m.shape}")
    return m.T


def parse_walk_spec(data: dict, g: Graph) -> tuple[StochasticSchedule, np.ndarray]:
    """Build the schedule and initial distribution described by a walk-spec object."""
    n = g.vertex_count
    try:
        mode = data["mode"]
        if mode == "homogeneous":
            schedule = StochasticSchedule.homogeneous(_matrix(data["matrix"], n, "matrix"))
        elif mode == "sequence":
            schedule = StochasticSchedule.sequence(
                [_matrix(m, n, f"matrices[{t}]") for t, m in enumerate(data["matrices"])]
            )
        elif mode == "generator":
            gen = data["generator"]
            if gen.get("kind") != "random":
                raise FormatError(f"unsupported generator kind {gen.get('kind')!r}")
            schedule = StochasticSchedule.random(g, int(gen["seed"]))
        else:
            raise FormatError(f"unknown mode {mode!r}")
        pi0 = check_distribution(data["initial"], n)
    except KeyError as exc:
        raise FormatError(f"walk spec is missing key {exc}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from exc
    return schedule, pi0


def read_walk_spec(path, g: Graph) -> tuple[StochasticSchedule, np.ndarray]:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError(f"{path}: walk spec must be a JSON object")
    return parse_walk_spec(data, g)


def trajectory_rows(g: Graph, records: list[MatchedStep]):
    """Yield ``(t, vertex, pi, mu, abs_diff)`` per time step and vertex."""
    for rec in records:
        mu = vertex_probabilities(rec.psi, g)
        for v in range(g.vertex_count):
            yield rec.t, v, float(rec.pi[v]), float(mu[v]), abs(float(mu[v]) - float(rec.pi[v]))


def write_trajectory_csv(path, g: Graph, records: list[MatchedStep], labels: list[str] | None = None) -> int:
    """Write ``t,vertex,pi,mu,abs_diff`` rows at 17 significant digits; returns the row count."""
    lines = ["t,vertex,pi,mu,abs_diff"]
    for t, v, pi, mu, diff in trajectory_rows(g, records):
        name = labels[v] if labels is not None else str(v)
        lines.append(f"{t},{name},{pi:.17g},{mu:.17g},{diff:.17g}")
    Path(path).write_text("\n".join(lines) + "\n")
    return len(lines) - 1


def operator_dump(shift: ShiftPermutation, coin: CoinOperator) -> dict:
    """JSON-ready shift permutation and coin blocks as nested ``[re, im]`` pairs."""
    return {
        "t": coin.t,
        "shift": [int(i) for i in shift.permutation],
        "coin": [
            [[[float(z.real), float(z.imag)] for z in row] for row in block] for block in coin.blocks
        ],
    }
