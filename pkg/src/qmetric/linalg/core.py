"""Dense matrix arithmetic on M_n(C): adjoint, norms, Jordan/Lie products, units, unitaries.

Indices at this interface are 1-based (matrix unit E_{n,j,k} has its 1 at row
j, column k); storage is 0-based and the translation happens in
:func:`matrix_unit` only.
"""
from __future__ import annotations

from typing import Any

import numpy as np
import scipy.linalg

from ..errors import DimensionError, DomainError
from ..models import HERMITIAN_TOL, UNITARY_TOL, HermitianMatrix, Matrix, as_matrix
from .jacobi import eigh


def adjoint(a: Any) -> Matrix:
    """Conjugate transpose a*."""
    return as_matrix(a).conj().T.copy()


def is_hermitian(a: Any, tol: float = HERMITIAN_TOL) -> bool:
    array = as_matrix(a)
    if array.shape[0] != array.shape[1]:
        return False
    return float(np.max(np.abs(array - array.conj().T))) <= tol


def is_unitary(u: Any, tol: float = UNITARY_TOL) -> bool:
    array = as_matrix(u)
    if array.shape[0] != array.shape[1]:
        return False
    deviation = array.conj().T @ array - np.eye(array.shape[0])
    return float(np.max(np.abs(deviation))) <= tol


def _is_diagonal(array: np.ndarray) -> bool:
    return not np.any(array - np.diag(np.diag(array)))


def max_abs_diagonal_norm(a: Any) -> float:
    """Operator norm of a diagonal matrix: the largest |entry|, exact in floating point."""
    array = as_matrix(a, square=True)
    if not _is_diagonal(array):
        raise DomainError("max_abs_diagonal_norm needs a diagonal matrix")
    return float(np.max(np.abs(np.diag(array))))


def operator_norm(a: Any) -> float:
    """Spectral norm ||a||_op.

    Diagonal input is read off exactly; Hermitian input is max |eigenvalue|;
    anything else is sqrt of the top eigenvalue of a*a.
    """
    array = as_matrix(a, square=True)
    if _is_diagonal(array):
        return float(np.max(np.abs(np.diag(array))))
    if is_hermitian(array):
        eigenvalues = eigh(array).eigenvalues
        return float(max(abs(eigenvalues[0]), abs(eigenvalues[-1])))
    gram = array.conj().T @ array
    top = eigh(HermitianMatrix.from_array((gram + gram.conj().T) / 2)).eigenvalues[-1]
    return float(np.sqrt(max(top, 0.0)))


def trace_norm(h: Any) -> float:
    """Schatten-1 norm of a Hermitian matrix (sum of |eigenvalues|)."""
    h = HermitianMatrix.from_array(h)
    if h.is_diagonal:
        return float(np.sum(np.abs(h.real_diagonal())))
    return float(np.sum(np.abs(eigh(h).eigenvalues)))


def power_iteration_norm(
    a: Any, max_iters: int = 100_000, seed: int = 0, rtol: float = 1e-12
) -> float:
    """Spectral norm by power iteration on a*a, an oracle independent of :func:`eigh`."""
    array = as_matrix(a, square=True)
    gram = array.conj().T @ array
    rng = np.random.default_rng(seed)
    vector = rng.standard_normal(gram.shape[0]) + 1j * rng.standard_normal(gram.shape[0])
    vector /= np.linalg.norm(vector)
    estimate = 0.0
    for _ in range(max_iters):
        image = gram @ vector
        estimate = float(np.real(np.vdot(vector, image)))
        residual = float(np.linalg.norm(image - estimate * vector))
        norm = float(np.linalg.norm(image))
        if norm == 0.0:
            return 0.0
        if residual <= rtol * max(estimate, np.finfo(float).tiny):
            break
        vector = image / norm
    return float(np.sqrt(max(estimate, 0.0)))


def _hermitian_pair(a: Any, b: Any) -> tuple[HermitianMatrix, HermitianMatrix]:
    a = HermitianMatrix.from_array(a)
    b = HermitianMatrix.from_array(b)
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")
    return a, b


def jordan(a: Any, b: Any) -> HermitianMatrix:
    """Jordan product (ab + ba) / 2."""
    a, b = _hermitian_pair(a, b)
    product = a.data @ b.data
    return HermitianMatrix.from_array((product + product.conj().T) / 2)


def lie(a: Any, b: Any) -> HermitianMatrix:
    """Lie product (ab - ba) / (2i)."""
    a, b = _hermitian_pair(a, b)
    product = a.data @ b.data
    return HermitianMatrix.from_array((product - product.conj().T) / 2j)


def matrix_unit(n: int, j: int, k: int) -> Matrix:
    """E_{n,j,k}: a single 1 at row j, column k (1-based)."""
    if n < 1:
        raise DomainError(f"n must be positive (n={n})")
    if not (1 <= j <= n and 1 <= k <= n):
        raise DomainError(f"matrix unit indices must lie in 1..{n} (j={j}, k={k})")
    unit = np.zeros((n, n), dtype=np.complex128)
    unit[j - 1, k - 1] = 1.0
    return unit


def conjugate_by_unitary(u: Any, a: Any, tol: float = UNITARY_TOL) -> Any:
    """U a U*; Hermitian input yields a HermitianMatrix."""
    unitary = as_matrix(u, square=True)
    if not is_unitary(unitary, tol):
        raise DomainError(f"U is not unitary within {tol:.1e}")
    array = as_matrix(a, square=True)
    if array.shape != unitary.shape:
        raise DimensionError(f"U has shape {unitary.shape} but a has shape {array.shape}")
    result = unitary @ array @ unitary.conj().T
    if isinstance(a, HermitianMatrix):
        return HermitianMatrix.from_array((result + result.conj().T) / 2)
    return result


def random_hermitian(n: int, seed: int) -> HermitianMatrix:
    """(G + G*) / 2 for a seeded complex Gaussian G."""
    if n < 1:
        raise DomainError(f"n must be positive (n={n})")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return HermitianMatrix.from_array((g + g.conj().T) / 2)


def random_matrix(n: int, seed: int) -> Matrix:
    """A seeded complex Gaussian n-by-n matrix."""
    if n < 1:
        raise DomainError(f"n must be positive (n={n})")
    rng = np.random.default_rng(seed)
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_unitary(n: int, seed: int) -> Matrix:
    """Haar unitary from the QR factorization of a complex Ginibre matrix.

    Columns are rescaled so the triangular factor has a positive real diagonal.
    """
    z = random_matrix(n, seed) / np.sqrt(2.0)
    q, r = scipy.linalg.qr(z)
    pivots = np.diag(r)
    magnitudes = np.abs(pivots)
    phases = np.where(magnitudes > 0, pivots / np.where(magnitudes > 0, magnitudes, 1.0), 1.0)
    return q * phases


__all__ = [
    "adjoint",
    "conjugate_by_unitary",
    "is_hermitian",
    "is_unitary",
    "jordan",
    "lie",
    "matrix_unit",
    "max_abs_diagonal_norm",
    "operator_norm",
    "power_iteration_norm",
    "random_hermitian",
    "random_matrix",
    "random_unitary",
    "trace_norm",
]
