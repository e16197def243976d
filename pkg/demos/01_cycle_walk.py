"""Matching the simple random walk on a 4-cycle, step by step."""

# %%
import numpy as np

from qwmatch import (
    StochasticSchedule,
    build_coin,
    build_graph,
    build_shift,
    initial_state,
    qw_step,
    step,
    uniform_walk_matrix,
    vertex_probabilities,
)

np.set_printoptions(precision=4, suppress=True)

# %% The graph. Neighbors are kept sorted, and coin c of vertex v points at
# the c-th smallest neighbor.
g = build_graph([(0, 1), (1, 2), (2, 3), (3, 0)])
print(g, g.neighbor_lists)

# %% A walker that starts at vertex 0 and moves left or right with
# probability 1/2. Columns of P are "from", rows are "to".
P = uniform_walk_matrix(g)
schedule = StochasticSchedule.homogeneous(P)
pi = np.array([1.0, 0, 0, 0])

# %% The quantum walker starts in an even superposition of the edges of
# vertex 0. The shift never changes; the coin is rebuilt at every step.
shift = build_shift(g)
psi = initial_state(g, pi)
print("shift permutation:", shift.permutation)

for t in range(6):
    coin = build_coin(g, psi, schedule(t), pi, t=t)
    psi = qw_step(g, psi, shift, coin)
    pi = step(schedule(t), pi)
    print(f"t={t + 1}  pi={pi}  mu={vertex_probabilities(psi, g)}")

# %% For this walk every incoming block already has the shape of the outgoing
# one, so each coin is the identity and the shift alone moves the walker.
print(all(np.allclose(w, np.eye(2)) for w in coin.blocks))

# %% Bias the walk: 0.7 clockwise, 0.3 counter-clockwise. Now the coin has to
# rotate amplitude between the two edges of each vertex.
P = np.zeros((4, 4))
for u in range(4):
    P[(u + 1) % 4, u] = 0.7
    P[(u - 1) % 4, u] = 0.3
pi = np.array([0.4, 0.3, 0.2, 0.1])
psi = initial_state(g, pi)
for t in range(4):
    coin = build_coin(g, psi, P, pi, t=t)
    psi = qw_step(g, psi, shift, coin)
    pi = step(P, pi)
    print(f"t={t + 1}  max |mu - pi| = {np.abs(vertex_probabilities(psi, g) - pi).max():.1e}")
print(coin.blocks[1].real)
