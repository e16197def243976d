"""Driving the command line from an edge list and a walk spec."""

# %%
import json
import tempfile
from pathlib import Path

from qwmatch.cli import main

work = Path(tempfile.mkdtemp())

# %% Labels can be any tokens; they are sorted to fix the neighbor order.
(work / "star.txt").write_text("""# a star with a tail
hub a
hub b
hub c
c d
""")

# %% Matrices are written column by column, in sorted label order
# (a, b, c, d, hub): column u lists where the walker goes from u.
columns = [
    [0, 0, 0, 0, 1],            # a -> hub
    [0, 0, 0, 0, 1],            # b -> hub
    [0, 0, 0, 0.25, 0.75],      # c -> d or hub
    [0, 0, 1, 0, 0],            # d -> c
    [0.2, 0.3, 0.5, 0, 0],      # hub -> a, b, c
]
(work / "walk.json").write_text(json.dumps(
    {"mode": "homogeneous", "matrix": columns, "initial": [0, 0, 0, 1, 0]}))

# %% Same as: qwmatch --graph star.txt --walk walk.json --steps 8 --dump-operators --out run
status = main(["--graph", str(work / "star.txt"), "--walk", str(work / "walk.json"),
               "--steps", "8", "--dump-operators", "--out", str(work / "run")])
print("exit status", status)
print((work / "run" / "trajectory.csv").read_text().splitlines()[:6])
print(sorted(p.name for p in (work / "run" / "operators").iterdir()))
