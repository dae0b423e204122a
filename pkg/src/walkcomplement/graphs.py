"""Adjacency matrices of complete graphs and their shift-operator decompositions.

A shift operator for a walk on a graph is a block matrix whose blocks, summed,
reproduce the graph's adjacency matrix, and whose block rows and block columns
each form a set of Kraus operators.  Two decompositions of the all-ones
adjacency matrix of the complete graph with self-loops are supported:

* ``SWAP`` model: one single-entry block per (i, j) arc; the assembled operator
  exchanges the coin and position registers.
* ``CNOT`` model: one XOR-permutation block per coin value, placed on the block
  diagonal; the assembled operator maps ``|i>|j> -> |i>|j XOR i>``.

Only complete graphs with self-loops are constructible through this API.
Decomposing an arbitrary adjacency matrix admits many valid solutions and is
deliberately not attempted; unsupported inputs are rejected.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import linalg


class ShiftModel(enum.Enum):
    SWAP = "swap"
    CNOT = "cnot"


MAX_QUBITS = 12


def complete_adjacency(n: int) -> np.ndarray:
    """All-ones adjacency matrix of the complete graph on 2^n nodes with self-loops."""
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"n must be in 1..{MAX_QUBITS}, got {n}")
    return np.ones((2**n, 2**n), dtype=np.int64)


@dataclass(frozen=True)
class ShiftDecomposition:
    """A decomposition of an adjacency matrix into shift-operator blocks.

    For the SWAP model, ``blocks`` maps ``(i, j)`` to the 0/1 block with a
    single 1 at entry ``(i, j)``.  For the CNOT model it maps ``i`` to the
    permutation block sending ``j`` to ``j XOR i``.
    """

    model: ShiftModel
    n: int
    blocks: dict

    def block_sum(self) -> np.ndarray:
        """Sum of all blocks; equals the decomposed adjacency matrix."""
        return sum(self.blocks.values())


@dataclass(frozen=True)
class ShiftOperator:
    """An assembled, validated shift operator over coin (x) position."""

    matrix: np.ndarray
    model: ShiftModel | None
    n: int


def _xor_permutation(n_nodes: int, i: int) -> np.ndarray:
    block = np.zeros((n_nodes, n_nodes), dtype=np.int64)
    for k in range(n_nodes):
        block[k ^ i, k] = 1
    return block


def decompose(adj: np.ndarray, model: ShiftModel) -> ShiftDecomposition:
    """Decompose a complete-graph adjacency matrix into shift blocks."""
    adj = np.asarray(adj)
    n_nodes = adj.shape[0]
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise ValueError("adjacency matrix must be square")
    n = int(n_nodes).bit_length() - 1
    if 2**n != n_nodes or not np.all(adj == 1):
        raise ValueError(
            "only the all-ones adjacency of a complete graph with self-loops "
            "on a power-of-two number of nodes is supported"
        )
    if model is ShiftModel.SWAP:
        blocks = {}
        for i in range(n_nodes):
            for j in range(n_nodes):
                b = np.zeros((n_nodes, n_nodes), dtype=np.int64)
                b[i, j] = 1
                blocks[(i, j)] = b
    else:
        blocks = {i: _xor_permutation(n_nodes, i) for i in range(n_nodes)}
    return ShiftDecomposition(model=model, n=n, blocks=blocks)


def assemble_shift(dec: ShiftDecomposition) -> ShiftOperator:
    """Assemble a shift operator by placing the transposed blocks into S.

    SWAP-model block (i, j) of S is ``B_ij^T``; CNOT-model blocks go on the
    block diagonal.  The result must satisfy both Kraus conditions and be
    unitary, otherwise the decomposition is rejected.
    """
    n_nodes = 2**dec.n
    dim = n_nodes * n_nodes
    s = np.zeros((dim, dim), dtype=np.complex128)
    if dec.model is ShiftModel.SWAP:
        for (i, j), block in dec.blocks.items():
            s[i * n_nodes:(i + 1) * n_nodes, j * n_nodes:(j + 1) * n_nodes] = block.T
    else:
        for i, block in dec.blocks.items():
            s[i * n_nodes:(i + 1) * n_nodes, i * n_nodes:(i + 1) * n_nodes] = block.T
    op = ShiftOperator(matrix=s, model=dec.model, n=dec.n)
    if not verify_kraus(op) or not linalg.is_unitary(s):
        raise ValueError("assembled matrix does not satisfy the Kraus conditions")
    return op


def shift_operator(n: int, model: ShiftModel) -> ShiftOperator:
    """Shift operator for the complete graph on 2^n nodes, in the given model."""
    return assemble_shift(decompose(complete_adjacency(n), model))


def kraus_conditions_hold(matrix: np.ndarray, n_blocks: int,
                          tol: float = linalg.DEFAULT_ATOL) -> bool:
    """Check both Kraus conditions on a block matrix with ``n_blocks`` block rows.

    Block columns must satisfy sum_i B_ik^dag B_il = delta_kl I, block rows
    sum_i B_ki B_li^dag = delta_kl I (the transpose of the matrix being
    unitary as well).  Works on any square matrix whose dimension divides
    into n_blocks.
    """
    matrix = linalg.as_complex_matrix(matrix)
    dim = matrix.shape[0]
    if matrix.shape[0] != matrix.shape[1] or dim % n_blocks != 0:
        raise ValueError(f"matrix of shape {matrix.shape} does not split into "
                         f"{n_blocks} square blocks")
    if tol <= 0:
        raise ValueError("tol must be positive")
    nn = dim // n_blocks
    b = matrix.reshape(n_blocks, nn, n_blocks, nn)
    target = np.einsum("kl,bc->klbc", np.eye(n_blocks), np.eye(nn))
    # column condition: sum over block-row index i of B_ik^dag B_il
    cols = np.einsum("iakb,ialc->klbc", b.conj(), b, optimize=True)
    if np.abs(cols - target).max() >= tol:
        return False
    # row condition: sum over block-column index i of B_ki B_li^dag
    rows = np.einsum("kbia,lcia->klbc", b, b.conj(), optimize=True)
    return bool(np.abs(rows - target).max() < tol)


def verify_kraus(s: ShiftOperator, tol: float = linalg.DEFAULT_ATOL) -> bool:
    """True iff both Kraus conditions hold for the operator's block structure."""
    return kraus_conditions_hold(s.matrix, 2**s.n, tol)


def load_shift_operator(path) -> ShiftOperator:
    """Load a user-supplied shift operator from a linalg CSV matrix file.

    The matrix dimension must be a perfect square 4^n; the operator is
    validated against both Kraus conditions and unitarity.
    """
    matrix = linalg.load_matrix_csv(path)
    dim = matrix.shape[0]
    if matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"{path}: shift operator must be square, got {matrix.shape}")
    n_nodes = int(round(dim**0.5))
    n = n_nodes.bit_length() - 1
    if n_nodes * n_nodes != dim or 2**n != n_nodes:
        raise ValueError(f"{path}: dimension {dim} is not 4^n for integer n")
    op = ShiftOperator(matrix=matrix, model=None, n=n)
    if not verify_kraus(op) or not linalg.is_unitary(matrix):
        raise ValueError(f"{path}: matrix fails the Kraus/unitarity checks")
    return op
