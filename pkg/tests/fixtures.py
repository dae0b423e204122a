"""Frozen expected values shared across the test modules.

The K_4 matrices below are the hand-checkable ground truth for the
target-1 search complement: the one-step operator with the init layer folded
in, its entrywise squared magnitudes, and the probability matrix obtained by
summing the block rows.  All entries are exact multiples of 1/4 resp. 1/16.
"""

import numpy as np

# One-step complement operator on K_4, target node 1, coin-major layout.
# Stored as 4x the amplitudes; every entry is 0, +-1 or +-2.
K4_TARGET1_OPERATOR_X4 = np.array([
    [2,  2,  2,  2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [1, -1,  1, -1,  1, -1,  1, -1,  1, -1,  1, -1,  1, -1,  1, -1],
    [2,  2, -2, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [2, -2, -2,  2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [1, -1,  1, -1, -1,  1, -1,  1,  1, -1,  1, -1, -1,  1, -1,  1],
    [0,  0,  0,  0,  2,  2,  2,  2,  0,  0,  0,  0,  0,  0,  0,  0],
    [0,  0,  0,  0,  2, -2, -2,  2,  0,  0,  0,  0,  0,  0,  0,  0],
    [0,  0,  0,  0,  2,  2, -2, -2,  0,  0,  0,  0,  0,  0,  0,  0],
    [0,  0,  0,  0,  0,  0,  0,  0,  2,  2, -2, -2,  0,  0,  0,  0],
    [0,  0,  0,  0,  0,  0,  0,  0,  2, -2, -2,  2,  0,  0,  0,  0],
    [0,  0,  0,  0,  0,  0,  0,  0,  2,  2,  2,  2,  0,  0,  0,  0],
    [1, -1,  1, -1,  1, -1,  1, -1, -1,  1, -1,  1, -1,  1, -1,  1],
    [0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  2, -2, -2,  2],
    [0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  2,  2, -2, -2],
    [1, -1,  1, -1, -1,  1, -1,  1, -1,  1, -1,  1,  1, -1,  1, -1],
    [0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  2,  2,  2,  2],
], dtype=float)

K4_TARGET1_OPERATOR = K4_TARGET1_OPERATOR_X4 / 4.0

# conj(U) * U for the operator above; entries are 16x the probabilities.
K4_TARGET1_SQUARED_X16 = (K4_TARGET1_OPERATOR_X4**2).astype(int)

# Probability matrix: block rows of the squared operator summed; 16x values.
_row_a = [5, 5, 5, 5]
_row_b = [1, 1, 1, 1]
K4_TARGET1_PROBABILITY_MATRIX_X16 = np.array([
    _row_a + _row_b + _row_a + _row_a,
    _row_b + _row_a + _row_a + _row_a,
    _row_a + _row_a + _row_a + _row_b,
    _row_a + _row_a + _row_b + _row_a,
], dtype=float)

K4_TARGET1_PROBABILITY_MATRIX = K4_TARGET1_PROBABILITY_MATRIX_X16 / 16.0

# Distribution after one step from |c_0> (x) |v_0>.
K4_TARGET1_DISTRIBUTION = np.array([5, 1, 5, 5], dtype=float) / 16.0
