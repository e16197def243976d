"""Unitary coined quantum walks that reproduce random walks on finite graphs."""

from .classical import (
    ScheduleError,
    StochasticSchedule,
    evolve,
    stationary_distribution,
    step,
    uniform_walk_matrix,
    validate_schedule,
)
from .graph import EdgeState, Graph, GraphError, build_graph, edge_state_from_index, edge_state_index, eta, sigma
from .orthonormal import OrthonormalizationError, gram_schmidt, li_set
from .quantum import (
    BuildConfig,
    CoinConstructionError,
    CoinOperator,
    ShiftPermutation,
    build_coin,
    build_shift,
    coin_block,
    extract_vertex_block,
    initial_state,
    closed_form_state,
    matched_walk,
    qw_step,
    target_phi,
    vertex_probabilities,
)
from .verify import MatchReport, Tolerances, check_unitary, dense_oracle, run_matched

__version__ = "0.1.0"
