#!/usr/bin/env python3
"""A first coined walk on the complete graph with self-loops.

Builds both shift operators for K_4 (the register-swap form and the
XOR-permutation form), pairs them with a Hadamard coin, and runs a single
step from a basis state to show how the walker spreads.
"""

import numpy as np

from walkcomplement import (
    PerturbedCoin,
    ShiftModel,
    UniformCoin,
    basis_state,
    evolution_operator,
    evolve,
    grover_coin,
    hadamard_coin,
    node_probabilities,
    shift_operator,
    verify_kraus,
)

np.set_printoptions(precision=4, suppress=True)

# --- shift operators -------------------------------------------------------
# Both decompose the all-ones adjacency matrix of K_4; the blocks differ, so
# the walker moves differently under each.
for model in ShiftModel:
    op = shift_operator(2, model)
    print(f"{model.value} shift operator (16x16), Kraus conditions hold:",
          verify_kraus(op))
print()

# The CNOT model sends |coin> (x) |pos> to |coin> (x) |pos XOR coin>:
s = shift_operator(2, ShiftModel.CNOT)
walker = basis_state(2, coin=3, position=1)
moved = evolve(walker, evolution_operator(s, UniformCoin(np.eye(4))), 1)
print("CNOT shift moves (coin 3, node 1) to node", int(np.argmax(
    node_probabilities(moved))), "(= 1 XOR 3)")
print()

# --- one step with a Hadamard coin -----------------------------------------
coin = UniformCoin(hadamard_coin(2))
u = evolution_operator(s, coin, with_init_layer=False)
state = evolve(basis_state(2, 0, 0), u, 1)
print("one Hadamard-coin step from (coin 0, node 0):")
print("  node distribution:", node_probabilities(state))
print()

# --- the perturbed coin ----------------------------------------------------
# Applying a different coin at one marked node is the oracle of the
# walk-based search algorithms.  With the identity perturbation the marked
# node simply passes amplitudes through.
perturbed = PerturbedCoin(original=hadamard_coin(2), perturbation=np.eye(4), target=1)
u = evolution_operator(s, perturbed, with_init_layer=True)
state = evolve(basis_state(2, 0, 0), u, 1)
print("one step with the perturbed coin (target 1) and the init layer:")
print("  node distribution:", node_probabilities(state))
print("  node 1 is visibly suppressed: 1/16 vs 5/16 elsewhere")
print()

# The Grover reflection is the other classic coin choice:
print("Grover coin on 3 qubits, diagonal entries:", np.diag(grover_coin(3)).real)
