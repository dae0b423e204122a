"""Coined discrete-time quantum walks on complete graphs with self-loops.

The package builds shift and coin operators, evolves walker states, collapses
operators into probability matrices and multigraphs, runs the one-step
search-complement algorithm through three mutually validating routes, and
synthesizes the corresponding quantum circuit down to OpenQASM 2.0.
"""

__version__ = "0.1.0"

from .complement import (
    ComplementResult,
    ComplementSpec,
    Method,
    build_complement_operator,
    closed_form_distribution,
    cross_validate,
    run_complement_dense,
    run_complement_statevector,
)
from .graphs import ShiftModel, complete_adjacency, decompose, shift_operator, verify_kraus
from .probability import (
    collapse_multigraph,
    l1_distance,
    node_probabilities,
    probability_matrix,
)
from .walk import (
    EvolutionOperator,
    PerturbedCoin,
    PositionDependentCoin,
    UniformCoin,
    WalkerState,
    basis_state,
    evolution_operator,
    evolve,
    grover_coin,
    hadamard_coin,
)

__all__ = [
    "ComplementResult",
    "ComplementSpec",
    "EvolutionOperator",
    "Method",
    "PerturbedCoin",
    "PositionDependentCoin",
    "ShiftModel",
    "UniformCoin",
    "WalkerState",
    "basis_state",
    "build_complement_operator",
    "closed_form_distribution",
    "collapse_multigraph",
    "complete_adjacency",
    "cross_validate",
    "decompose",
    "evolution_operator",
    "evolve",
    "grover_coin",
    "hadamard_coin",
    "l1_distance",
    "node_probabilities",
    "probability_matrix",
    "run_complement_dense",
    "run_complement_statevector",
    "shift_operator",
    "verify_kraus",
]
