"""A fixed transition matrix still needs a time-dependent coin."""

# %%
import numpy as np

from qwmatch import StochasticSchedule, build_graph, matched_walk, uniform_walk_matrix, vertex_probabilities

# %% Uniform walk on a triangle from vertex 0. The chain is irreducible and
# aperiodic, so pi(t) approaches (1/3, 1/3, 1/3); the second eigenvalue is
# -1/2, so the gap halves each step.
g = build_graph([(0, 1), (1, 2), (0, 2)])
schedule = StochasticSchedule.homogeneous(uniform_walk_matrix(g))
records = list(matched_walk(g, schedule, [1.0, 0, 0], 40))

for rec in records[::8]:
    mu = vertex_probabilities(rec.psi, g)
    print(f"t={rec.t:2d}  L1 to uniform {np.abs(rec.pi - 1 / 3).sum():.2e}  "
          f"max |mu - pi| {np.abs(mu - rec.pi).max():.1e}")

# %% P is the same at every step, but the coin is not. It is rebuilt from
# pi(t) and the current state, and here it never settles: pi(t) oscillates
# around the uniform vector, so which neighbor carries the largest amplitude
# keeps alternating, and with it the basis used to complete each block.
for t in (0, 1, 2, 10, 30):
    nxt = records[t + 1].coin
    change = max(np.abs(a - b).max() for a, b in zip(records[t].coin.blocks, nxt.blocks))
    print(f"max change in coin between t={t} and t={t + 1}: {change:.2e}")
