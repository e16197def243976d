"""
Command-line front end.

Exactly one input source is used: ``--graph`` with ``--walk``, ``--demo``, or
``--seed``. Outputs go to ``--out``: ``trajectory.csv``, ``report.json`` and,
with ``--dump-operators``, ``operators/t<k>.json``.

Exit status: 0 when the report passes, 1 on an invariant breach, 2 on bad
arguments or unparsable input, 3 when the schedule fails validation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .classical import validate_schedule
from .formats import FormatError, operator_dump, read_edge_list, read_walk_spec, write_trajectory_csv
from .instances import DEMOS, demo_instance, generate_instance
from .quantum import BuildConfig, build_shift
from .verify import Tolerances, run_matched

log = logging.getLogger("qwmatch")

EXIT_OK, EXIT_BREACH, EXIT_INPUT, EXIT_SCHEDULE = 0, 1, 2, 3


@dataclass
class RunSpec:
    graph_path: str | None = None
    walk_path: str | None = None
    steps: int = 10
    tolerance: float = 1e-9
    output_dir: str = "out"
    dump_operators: bool = False
    demo: str | None = None
    seed: int | None = None
    n: int = 12
    mode: str = "nonhomogeneous"

    def check(self) -> None:
        if self.steps < 0:
            raise ValueError("--steps must be nonnegative")
        if not self.tolerance > 0:
            raise ValueError("--tol must be positive")
        sources = [self.graph_path is not None or self.walk_path is not None,
                   self.demo is not None, self.seed is not None]
        if sum(sources) != 1:
            raise ValueError("use exactly one of --graph/--walk, --demo, --seed")
        if sources[0] and (self.graph_path is None or self.walk_path is None):
            raise ValueError("--graph and --walk must be given together")


def _load(spec: RunSpec):
    if spec.demo is not None:
        g, schedule, pi0 = demo_instance(spec.demo)
        return g, schedule, pi0, None
    if spec.seed is not None:
        g, schedule, pi0 = generate_instance(spec.seed, spec.n, spec.mode)
        return g, schedule, pi0, None
    g, labels = read_edge_list(spec.graph_path)
    schedule, pi0 = read_walk_spec(spec.walk_path, g)
    return g, schedule, pi0, labels


def run(spec: RunSpec) -> int:
    """Execute one run and write its artifacts. Returns the exit status."""
    try:
        spec.check()
        g, schedule, pi0, labels = _load(spec)
    except (OSError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT

    out = Path(spec.output_dir)
    out.mkdir(parents=True, exist_ok=True)

    validation = validate_schedule(schedule, g, spec.steps)
    records: list = []
    report = run_matched(g, schedule, pi0, spec.steps, BuildConfig(),
                         Tolerances(deviation=spec.tolerance), trajectory=records)
    (out / "report.json").write_text(report.to_json() + "\n")
    write_trajectory_csv(out / "trajectory.csv", g, records, labels)

    if spec.dump_operators:
        ops = out / "operators"
        ops.mkdir(exist_ok=True)
        shift = build_shift(g)
        for rec in records:
            if rec.coin is not None:
                (ops / f"t{rec.t}.json").write_text(json.dumps(operator_dump(shift, rec.coin)) + "\n")

    if not validation.valid:
        log.error("schedule failed validation with %d violation(s)", len(validation.violations))
        return EXIT_SCHEDULE
    if not report.passed:
        log.error("match failed: max deviation %.3g, errors %s", report.max_abs_deviation, report.errors)
        return EXIT_BREACH
    log.info("matched %d steps, max deviation %.3g", spec.steps, report.max_abs_deviation)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qwmatch",
        description="Build the coined quantum walk that reproduces a random walk's vertex probabilities.",
    )
    p.add_argument("--graph", dest="graph_path", help="edge-list file")
    p.add_argument("--walk", dest="walk_path", help="walk-spec JSON file")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--tol", dest="tolerance", type=float, default=1e-9,
                   help="bound on max |mu - pi| (default 1e-9)")
    p.add_argument("--out", dest="output_dir", default="out")
    p.add_argument("--dump-operators", action="store_true")
    p.add_argument("--demo", choices=sorted(DEMOS))
    p.add_argument("--seed", type=int, help="generate a random instance from this seed")
    p.add_argument("--n", type=int, default=12, help="vertex count for --seed (default 12)")
    p.add_argument("--mode", choices=["homogeneous", "nonhomogeneous"], default="nonhomogeneous")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    args = vars(build_parser().parse_args(argv))
    logging.basicConfig(level=logging.INFO if args.pop("verbose") else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    return run(RunSpec(**args))


if __name__ == "__main__":
    sys.exit(main())
