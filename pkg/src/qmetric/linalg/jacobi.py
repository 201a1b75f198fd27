"""Cyclic Jacobi eigensolver for complex Hermitian matrices."""
from __future__ import annotations

import logging
from typing import Any

import numpy as np

from ..errors import ConvergenceError
from ..models import HermitianMatrix, Spectrum

logger = logging.getLogger(__name__)

OFF_DIAGONAL_TOL = 1e-13
# entries below this fraction of ||h||_F are zeroed instead of rotated
NEGLIGIBLE_ENTRY = 1e-3 * float(np.finfo(float).eps)
SWEEPS_PER_DIMENSION = 40


def off_diagonal_norm(a: np.ndarray) -> float:
    """Frobenius norm of the strictly off-diagonal part."""
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotation(app: float, aqq: float, apq: complex) -> np.ndarray:
    """2x2 unitary J with (J* A J)[p, q] = 0 for the block [[app, apq], [conj(apq), aqq]]."""
    magnitude = abs(apq)
    phase = apq / magnitude
    theta = (aqq - app) / (2.0 * magnitude)
    if theta == 0.0:
        t = 1.0
    else:
        t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    return np.array([[c, s * phase], [-s * np.conj(phase), c]], dtype=np.complex128)


def eigh(h: HermitianMatrix | Any, max_sweeps: int | None = None) -> Spectrum:
    """Eigen-decompose a Hermitian matrix with cyclic Jacobi rotations.

    Converged when the off-diagonal Frobenius mass drops to ``1e-13 * ||h||_F``.
    Raises :class:`ConvergenceError` once ``max_sweeps`` (default ``40 * n``)
    sweeps pass without convergence.
    """
    h = HermitianMatrix.from_array(h)
    a = np.array(h.data, dtype=np.complex128, copy=True)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    budget = SWEEPS_PER_DIMENSION * n if max_sweeps is None else max_sweeps
    scale = float(np.linalg.norm(a))
    threshold = OFF_DIAGONAL_TOL * scale
    negligible = max(NEGLIGIBLE_ENTRY * scale, float(np.finfo(float).tiny))

    sweeps = 0
    while off_diagonal_norm(a) > threshold:
        if sweeps >= budget:
            raise ConvergenceError(
                f"Jacobi eigensolver did not converge in {budget} sweeps "
                f"(off-diagonal mass {off_diagonal_norm(a):.3e}, target {threshold:.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= negligible:
                    a[p, q] = a[q, p] = 0.0
                    continue
                j = _rotation(a[p, p].real, a[q, q].real, apq)
                idx = [p, q]
                a[:, idx] = a[:, idx] @ j
                a[idx, :] = j.conj().T @ a[idx, :]
                v[:, idx] = v[:, idx] @ j
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
        sweeps += 1

    eigenvalues = np.real(np.diag(a))
    order = np.argsort(eigenvalues, kind="stable")
    logger.debug("eigh converged", extra={"n": n, "sweeps": sweeps})
    return Spectrum(eigenvalues=eigenvalues[order], eigenvectors=v[:, order], sweeps=sweeps)


__all__ = ["eigh", "off_diagonal_norm"]
