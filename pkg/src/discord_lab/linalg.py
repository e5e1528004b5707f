"""Small dense linear-algebra helpers for 2x2 / 4x4 complex matrices."""

from __future__ import annotations

import numpy as np

TOL_HERM = 1e-10

__all__ = [
    "TOL_HERM",
    "tensor_product",
    "partial_trace",
    "partial_transpose_b",
    "hermitian_eigenvalues",
    "trace_norm",
    "hs_norm",
    "largest_singular_value",
]


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2x2 matrices, giving a 4x4 matrix."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError(f"expected two 2x2 factors, got {a.shape} and {b.shape}")
    return np.kron(a, b)


def partial_trace(rho: np.ndarray, keep: str) -> np.ndarray:
    """Trace out one qubit of a 4x4 matrix; keep is "A" or "B"."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    r = rho.reshape(2, 2, 2, 2)
    if keep == "A":
        return np.trace(r, axis1=1, axis2=3)
    if keep == "B":
        return np.trace(r, axis1=0, axis2=2)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def partial_transpose_b(rho: np.ndarray) -> np.ndarray:
    """Transpose the second tensor factor of a 4x4 matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    return rho.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


def hermitian_eigenvalues(m: np.ndarray, tol: float = TOL_HERM) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending.

    The input must be Hermitian within `tol` (max absolute entry of m - m^dag);
    it is symmetrized to (m + m^dag)/2 before the solve so roundoff-level
    asymmetry never leaks into the eigenvalues.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    dev = np.abs(m - m.conj().T).max()
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian: max |m - m^dag| = {dev:.3e}")
    w = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    return w[::-1]


def trace_norm(m: np.ndarray) -> float:
    """Trace norm (sum of singular values) of a square matrix."""
    m = np.asarray(m, dtype=complex)
    dev = np.abs(m - m.conj().T).max()
    if dev <= TOL_HERM:
        w = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
        return float(np.abs(w).sum())
    return float(np.linalg.svd(m, compute_uv=False).sum())


def hs_norm(m: np.ndarray) -> float:
    """Hilbert-Schmidt (Frobenius) norm of a matrix."""
    m = np.asarray(m)
    return float(np.sqrt((np.abs(m) ** 2).sum()))


def largest_singular_value(m: np.ndarray) -> float:
    """Largest singular value of a matrix."""
    m = np.asarray(m)
    return float(np.linalg.svd(m, compute_uv=False)[0])
