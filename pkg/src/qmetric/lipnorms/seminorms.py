"""The Lip-norms L_{n,1} and L_{n,k} on sa(M_n(C)) and their property checks."""
from __future__ import annotations

import logging
from typing import Any, Dict

import numpy as np
import numpy.typing as npt

from ..errors import DimensionError, DomainError
from ..linalg.core import conjugate_by_unitary, jordan, lie, operator_norm
from ..maps.embedding import normalized_trace
from ..maps.expectation import cond_expectation
from ..models import DivisorPair, HermitianMatrix, LipSpec, LipVariant, as_matrix

logger = logging.getLogger(__name__)

KERNEL_LIP_TOL = 1e-10
KERNEL_SCALAR_TOL = 1e-9


def _hermitian_for(spec: LipSpec, a: Any) -> HermitianMatrix:
    h = HermitianMatrix.from_array(a)
    if h.n != spec.n:
        raise DimensionError(f"{spec.label} acts on {spec.n}x{spec.n} matrices, got {h.n}x{h.n}")
    return h


def lip_eval(spec: LipSpec, a: Any) -> float:
    """L(a) for the Lip-norm selected by ``spec``.

    TRACE: ||a - P_{1,n}(a)||. DIVISOR: max(||a - P_{1,n}(a)||, k ||a - P_{k,n}(a)||).
    Diagonal input takes the exact max-|entry| path inside :func:`operator_norm`.
    """
    h = _hermitian_for(spec, a)
    scalar_part = cond_expectation(DivisorPair(1, spec.n), h.data)
    value = operator_norm(h.data - scalar_part)
    if spec.variant is LipVariant.DIVISOR:
        block_part = cond_expectation(DivisorPair(spec.k, spec.n), h.data)
        value = max(value, spec.k * operator_norm(h.data - block_part))
    return value


def lip_eval_diagonal(spec: LipSpec, values: Any) -> float:
    """L(diag(values)) computed on the real diagonal vector alone."""
    diagonal: npt.NDArray[np.float64] = np.asarray(values, dtype=float)
    if diagonal.shape != (spec.n,):
        raise DimensionError(f"{spec.label} needs a diagonal of length {spec.n}, got {diagonal.shape}")
    value = float(np.max(np.abs(diagonal - diagonal.mean())))
    if spec.variant is LipVariant.DIVISOR:
        block_mean = diagonal.reshape(spec.n // spec.k, spec.k).mean(axis=0)
        value = max(value, spec.k * float(np.max(np.abs(diagonal - np.tile(block_mean, spec.n // spec.k)))))
    return value


def witness(n: int, k: int) -> HermitianMatrix:
    """diag(k, 0, ..., 0), where L_{n,1} and L_{n,k} take different values."""
    LipSpec.divisor(n, k)
    values = np.zeros(n)
    values[0] = k
    return HermitianMatrix.diagonal(values)


def check_unitary_invariance(n: int, u: Any, a: Any) -> float:
    """|L_{n,1}(U a U*) - L_{n,1}(a)|; expected to vanish for every unitary U."""
    spec = LipSpec.trace(n)
    h = _hermitian_for(spec, a)
    unitary = as_matrix(u, square=True)
    if unitary.shape != (n, n):
        raise DimensionError(f"U must be {n}x{n}, got {unitary.shape}")
    rotated = conjugate_by_unitary(unitary, h)
    return abs(lip_eval(spec, rotated) - lip_eval(spec, h))


def check_quasi_leibniz(spec: LipSpec, a: Any, b: Any) -> float:
    """C(||a|| L(b) + ||b|| L(a)) + D L(a) L(b) - max(L(a o b), L({a, b})).

    A negative margin is a violation of the quasi-Leibniz inequality.
    """
    a = _hermitian_for(spec, a)
    b = _hermitian_for(spec, b)
    lip_a = lip_eval(spec, a)
    lip_b = lip_eval(spec, b)
    lhs = max(lip_eval(spec, jordan(a, b)), lip_eval(spec, lie(a, b)))
    rhs = spec.leibniz_C * (operator_norm(a) * lip_b + operator_norm(b) * lip_a)
    rhs += spec.leibniz_D * lip_a * lip_b
    return rhs - lhs


def check_kernel(spec: LipSpec, a: Any) -> bool:
    """True when L(a) vanishes exactly when a is a real multiple of the identity."""
    h = _hermitian_for(spec, a)
    lip_zero = lip_eval(spec, h) <= KERNEL_LIP_TOL
    scalar = normalized_trace(h.data).real * np.eye(spec.n)
    is_scalar = operator_norm(h.data - scalar) <= KERNEL_SCALAR_TOL
    if lip_zero != is_scalar:
        logger.debug("kernel mismatch", extra={"lip_zero": lip_zero, "is_scalar": is_scalar})
    return lip_zero == is_scalar


def check_seminorm(spec: LipSpec, a: Any, b: Any, r: float) -> Dict[str, float]:
    """Residuals for homogeneity, subadditivity and domination of L_{n,1} (all >= 0)."""
    if not np.isreal(r):
        raise DomainError("seminorm homogeneity is checked for real scalars only")
    a = _hermitian_for(spec, a)
    b = _hermitian_for(spec, b)
    lip_a = lip_eval(spec, a)
    lip_b = lip_eval(spec, b)
    residuals = {
        "homogeneity": abs(lip_eval(spec, a * r) - abs(r) * lip_a),
        "subadditivity": max(0.0, lip_eval(spec, a + b) - lip_a - lip_b),
        "domination": 0.0,
    }
    if spec.variant is LipVariant.DIVISOR:
        residuals["domination"] = max(0.0, lip_eval(LipSpec.trace(spec.n), a) - lip_a)
    return residuals


__all__ = [
    "check_kernel",
    "check_quasi_leibniz",
    "check_seminorm",
    "check_unitary_invariance",
    "lip_eval",
    "lip_eval_diagonal",
    "witness",
]
