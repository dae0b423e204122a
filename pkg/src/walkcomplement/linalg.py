"""Dense complex linear algebra kernel.

Everything in this package runs on plain ``numpy`` arrays of ``complex128``.
Operators are dense and row-major; the largest operator handled densely is
4096 x 4096 (two six-qubit registers), which fits comfortably in memory.
The functions here add the shape checking and the tolerance conventions the
rest of the package relies on.
"""

from __future__ import annotations

import numpy as np

# All operators built by this package are exact +-1/sqrt(2^k) combinations,
# so this tolerance is loose.
DEFAULT_ATOL = 1e-10


def as_complex_matrix(m) -> np.ndarray:
    """Coerce input to a 2-D complex128 array."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got array of ndim {m.ndim}")
    return m


def as_complex_vector(v) -> np.ndarray:
    """Coerce input to a 1-D complex128 array."""
    v = np.asarray(v, dtype=np.complex128)
    if v.ndim != 1:
        raise ValueError(f"expected a vector, got array of ndim {v.ndim}")
    return v


def kron(a, b) -> np.ndarray:
    """Kronecker (tensor) product of two matrices.

    Entry ``(i*b.rows + k, j*b.cols + l)`` of the result is ``a[i,j]*b[k,l]``.
    """
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def hadamard_product(a, b) -> np.ndarray:
    """Entrywise (Hadamard) product of two same-shaped matrices."""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return a * b


def apply(m, v) -> np.ndarray:
    """Matrix-vector product ``m @ v``."""
    m = as_complex_matrix(m)
    v = as_complex_vector(v)
    if m.shape[1] != v.shape[0]:
        raise ValueError(f"dimension mismatch: {m.shape} @ {v.shape}")
    return m @ v


def is_unitary(m, tol: float = DEFAULT_ATOL) -> bool:
    """True iff ``m`` is square and the max-abs entry of ``m^dag m - I`` is below tol."""
    m = as_complex_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"unitarity is only defined for square matrices, got {m.shape}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    delta = m.conj().T @ m - np.eye(m.shape[0])
    return float(np.abs(delta).max()) < tol


def save_matrix_csv(m, path) -> None:
    """Write a matrix as CSV, one matrix row per line.

    Each entry is stored as a ``re,im`` pair, so a row with c columns becomes
    2c comma-separated floats.
    """
    m = as_complex_matrix(m)
    flat = np.empty((m.shape[0], 2 * m.shape[1]))
    flat[:, 0::2] = m.real
    flat[:, 1::2] = m.imag
    np.savetxt(path, flat, delimiter=",", fmt="%.17g")


def load_matrix_csv(path) -> np.ndarray:
    """Inverse of :func:`save_matrix_csv`."""
    flat = np.loadtxt(path, delimiter=",", ndmin=2)
    if flat.shape[1] % 2 != 0:
        raise ValueError(f"{path}: odd number of columns, not re,im pairs")
    return flat[:, 0::2] + 1j * flat[:, 1::2]


def save_vector_csv(v, path) -> None:
    """Write a vector as CSV, one ``re,im`` line per entry."""
    v = as_complex_vector(v)
    np.savetxt(path, np.column_stack([v.real, v.imag]), delimiter=",", fmt="%.17g")


def load_vector_csv(path) -> np.ndarray:
    """Inverse of :func:`save_vector_csv`."""
    flat = np.loadtxt(path, delimiter=",", ndmin=2)
    if flat.shape[1] != 2:
        raise ValueError(f"{path}: expected two columns (re,im)")
    return flat[:, 0] + 1j * flat[:, 1]
