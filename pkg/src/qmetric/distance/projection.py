"""Projection onto the traceless unit Lip-ball.

The trace constraint ||a - tr_n(a) I|| <= 1 on traceless a is a spectral set, so
its projection is an eigenvalue map: shift and clip to [-1, 1] with zero sum.
The divisor constraint k ||a - P_{k,n}(a)|| <= 1 is handled on the lifted pair
z = (a, s) with s = a - P_{k,n}(a). Both balls are spectral in their own
coordinate, the coupling {s = a - P_{k,n}(a)} is a subspace, and
:func:`solve_lifted` splits the two with ADMM. Distances on the lifted pair are
measured in the metric ||a||^2 + ||a - P_{k,n}(a)||^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
import numpy.typing as npt

from ..errors import ConvergenceError, DomainError
from ..linalg.jacobi import eigh
from ..maps.expectation import cond_expectation
from ..models import DivisorPair, HermitianMatrix, LipSpec, LipVariant, as_matrix

PROJECTION_ITERS = 20000
PROJECTION_TOL = 1e-10


def _symmetrized(a: np.ndarray) -> np.ndarray:
    return (a + a.conj().T) / 2


def spectral_map(a: np.ndarray, fn: Callable[[npt.NDArray[np.float64]], np.ndarray]) -> np.ndarray:
    """V fn(lambda) V* for the eigen-decomposition of Hermitian ``a``."""
    spectrum = eigh(HermitianMatrix.from_array(_symmetrized(a)))
    v = spectrum.eigenvectors
    return (v * fn(spectrum.eigenvalues)) @ v.conj().T


def clip_zero_sum(values: npt.NDArray[np.float64], radius: float) -> npt.NDArray[np.float64]:
    """Euclidean projection of ``values`` onto {|mu_i| <= radius, sum mu_i = 0}.

    The clipped sum is piecewise linear and decreasing in the shift, so the
    zero is found exactly between two consecutive breakpoints.
    """
    values = np.asarray(values, dtype=float)
    if radius <= 0:
        return np.zeros_like(values)
    knots = np.sort(np.concatenate([values - radius, values + radius]))
    totals = np.clip(values[None, :] - knots[:, None], -radius, radius).sum(axis=1)
    index = int(np.searchsorted(-totals, 0.0))
    if totals[index] == 0.0:
        shift = knots[index]
    else:
        left, right = knots[index - 1], knots[index]
        above, below = totals[index - 1], totals[index]
        shift = left + (right - left) * above / (above - below)
    return np.clip(values - shift, -radius, radius)


def project_traceless_ball(a: np.ndarray, radius: float = 1.0) -> np.ndarray:
    """Frobenius projection onto {x : tr x = 0, ||x|| <= radius}."""
    n = a.shape[0]
    centered = a - (np.trace(a) / n) * np.eye(n)
    return spectral_map(centered, lambda values: clip_zero_sum(values, radius))


def project_ball(a: np.ndarray, radius: float) -> np.ndarray:
    """Frobenius projection onto the operator-norm ball {x : ||x|| <= radius}."""
    return spectral_map(a, lambda values: np.clip(values, -radius, radius))


@dataclass(frozen=True, slots=True, eq=False)
class LiftedSolution:
    """Outcome of :func:`solve_lifted`; ``matrix`` is traceless with ||matrix|| <= 1."""

    matrix: np.ndarray
    iterations: int
    converged: bool
    residual: float


def _off_image(pair: DivisorPair, a: np.ndarray) -> np.ndarray:
    return a - cond_expectation(pair, a)


def _onto_graph(pair: DivisorPair, lifted: np.ndarray) -> np.ndarray:
    a, s = lifted
    a = a + _off_image(pair, s - a) / 2
    return np.stack([a, _off_image(pair, a)])


def _onto_balls(spec: LipSpec, lifted: np.ndarray) -> np.ndarray:
    a, s = lifted
    return np.stack([project_traceless_ball(a), project_ball(s, 1.0 / spec.k)])


def solve_lifted(
    spec: LipSpec,
    anchor: np.ndarray,
    linear: np.ndarray,
    weight: float,
    penalty: float = 1.0,
    max_iters: int = PROJECTION_ITERS,
    tol: float = PROJECTION_TOL,
) -> LiftedSolution:
    """Minimize weight/2 ||a - anchor||^2 - <linear, a> over the divisor Lip-ball.

    ``weight = 1`` is the lifted-metric projection of ``anchor``; ``weight = 0``
    maximizes the linear functional. Scaled ADMM between the coupling subspace
    and the product of the two balls; stops once the primal gap ||z - w|| and
    the dual change penalty * ||w - w_prev|| both fall below ``tol``.
    """
    if spec.variant is not LipVariant.DIVISOR:
        raise DomainError(f"lifted solve needs a divisor Lip-norm, got {spec.label}")
    pair = DivisorPair(spec.k, spec.n)
    anchor = np.asarray(anchor, dtype=np.complex128)
    lifted_anchor = np.stack([anchor, _off_image(pair, anchor)])
    lifted_linear = np.stack([np.asarray(linear, dtype=np.complex128), np.zeros_like(anchor)])

    w = _onto_balls(spec, lifted_anchor)
    u = np.zeros_like(w)
    residual = float("inf")
    for iteration in range(1, max_iters + 1):
        z = _onto_graph(
            pair, (weight * lifted_anchor + lifted_linear + penalty * (w - u)) / (weight + penalty)
        )
        previous = w
        w = _onto_balls(spec, z + u)
        u = u + z - w
        primal = float(np.linalg.norm(z - w))
        dual = penalty * float(np.linalg.norm(w - previous))
        residual = max(primal, dual)
        if residual <= tol * max(1.0, float(np.linalg.norm(w))):
            return LiftedSolution(_symmetrized(w[0]), iteration, True, residual)
    return LiftedSolution(_symmetrized(w[0]), max_iters, False, residual)


def project_lip_ball(
    spec: LipSpec, x: np.ndarray, max_iters: int = PROJECTION_ITERS, tol: float = PROJECTION_TOL
) -> HermitianMatrix:
    """Project Hermitian ``x`` onto {a : tr a = 0, L(a) <= 1}.

    Raises :class:`ConvergenceError` when the divisor splitting exhausts ``max_iters``.
    """
    x = as_matrix(x, square=True)
    if spec.variant is LipVariant.TRACE:
        return HermitianMatrix.from_array(_symmetrized(project_traceless_ball(x)))
    solution = solve_lifted(spec, x, np.zeros_like(x), weight=1.0, max_iters=max_iters, tol=tol)
    if not solution.converged:
        raise ConvergenceError(
            f"{spec.label} projection did not converge in {max_iters} iterations "
            f"(residual {solution.residual:.3e})"
        )
    return HermitianMatrix.from_array(solution.matrix)


__all__ = [
    "LiftedSolution",
    "clip_zero_sum",
    "project_ball",
    "project_lip_ball",
    "project_traceless_ball",
    "solve_lifted",
    "spectral_map",
]
