"""Exact oracles for the state distance when rho - sigma is diagonal.

On commuting instances the supremum is attained on diagonal a, where the
Lip-ball turns into a polytope: |a_i - mean(a)| <= 1, plus
k |a_i - blockmean_i(a)| <= 1 for the divisor variant, blockmean_i averaging
the positions congruent to i mod k.
"""
from __future__ import annotations

import itertools
import logging
from typing import Any

import numpy as np
import numpy.typing as npt
from scipy.optimize import linprog

from ..errors import ConvergenceError, DimensionError, DomainError
from ..lipnorms.seminorms import lip_eval_diagonal
from ..models import LipSpec, LipVariant

logger = logging.getLogger(__name__)

ZERO_SUM_TOL = 1e-12


def _validated_delta(spec: LipSpec, delta: Any) -> npt.NDArray[np.float64]:
    values = np.asarray(delta, dtype=float)
    if values.shape != (spec.n,):
        raise DimensionError(f"delta must have length {spec.n}, got shape {values.shape}")
    if not np.all(np.isfinite(values)):
        raise DomainError("delta entries must be finite")
    total = float(values.sum())
    if abs(total) > ZERO_SUM_TOL:
        raise DomainError(f"delta must sum to zero (sum={total:.3e})")
    return values


def diagonal_constraints(spec: LipSpec) -> npt.NDArray[np.float64]:
    """Rows g with |g . a| <= 1 describing the diagonal restriction of the Lip-ball."""
    n = spec.n
    centered = np.eye(n) - np.full((n, n), 1.0 / n)
    rows = [centered]
    if spec.variant is LipVariant.DIVISOR:
        k = spec.k
        copies = n // k
        residues = np.arange(n) % k
        same_class = (residues[:, None] == residues[None, :]).astype(float) / copies
        rows.append(k * (np.eye(n) - same_class))
    return np.vstack(rows)


def mk_diagonal_oracle(spec: LipSpec, delta: Any) -> float:
    """max sum_i delta_i a_i over the diagonal Lip-ball, solved as a small exact LP."""
    values = _validated_delta(spec, delta)
    if not np.any(values):
        return 0.0
    constraints = diagonal_constraints(spec)
    a_ub = np.vstack([constraints, -constraints])
    b_ub = np.ones(a_ub.shape[0])
    result = linprog(
        -values,
        A_ub=a_ub,
        b_ub=b_ub,
        A_eq=np.ones((1, spec.n)),
        b_eq=np.zeros(1),
        bounds=[(None, None)] * spec.n,
        method="highs",
    )
    if not result.success:
        raise ConvergenceError(f"diagonal LP oracle failed for {spec.label}: {result.message}")
    logger.debug("diagonal oracle solved", extra={"spec": spec.label, "value": -result.fun})
    return float(-result.fun)


def grid_search_oracle(spec: LipSpec, delta: Any, step: float = 0.01) -> float:
    """Brute-force cross-oracle over a grid of traceless diagonal a (tiny n only)."""
    values = _validated_delta(spec, delta)
    if spec.n > 3:
        raise DomainError(f"grid search is limited to n <= 3 (n={spec.n})")
    axis = np.linspace(-1.0, 1.0, int(round(2.0 / step)) + 1)
    best = 0.0
    for head in itertools.product(axis, repeat=spec.n - 1):
        point = np.append(head, -sum(head))
        if lip_eval_diagonal(spec, point) <= 1.0 + 1e-12:
            best = max(best, float(values @ point))
    return best


__all__ = ["diagonal_constraints", "grid_search_oracle", "mk_diagonal_oracle"]
