"""The trace-preserving conditional expectation P_{k,n} onto pi_{k,n}(M_k(C)).

Three independent forms are kept: the coordinate-wise formula (production
path), the arithmetic mean of the diagonal blocks, and the orthogonal
expansion over the basis B_{k,n}. The latter two serve as oracles.
"""
from __future__ import annotations

from typing import Any, Dict

import numpy as np

from ..linalg.core import operator_norm
from ..linalg.jacobi import eigh
from ..models import DivisorPair, HermitianMatrix, Matrix, as_matrix
from .embedding import (
    _require_size,
    basis_B,
    block_decomposition,
    embed,
    embed_kron,
    hs_inner,
    normalized_trace,
)


def _square_of_size(pair: DivisorPair, a: Any) -> np.ndarray:
    array = as_matrix(a, square=True)
    _require_size(array, pair.n, "input to P_{k,n}")
    return array


def cond_expectation(pair: DivisorPair, a: Any) -> Matrix:
    """P_{k,n}(a), coordinate-wise.

    Within the diagonal blocks entry (i, j) is (k/n) * sum_l a_{p+kl, q+kl}
    with p, q the positions of i, j inside their block; off-block entries are 0.
    """
    array = _square_of_size(pair, a)
    if pair.k == pair.n:
        return array.copy()
    if pair.k == 1:
        return normalized_trace(array) * np.eye(pair.n, dtype=np.complex128)
    k = pair.k
    averaged = np.empty((k, k), dtype=np.complex128)
    for p in range(k):
        for q in range(k):
            averaged[p, q] = np.trace(array[p::k, q::k]) * (k / pair.n)
    return embed(pair, averaged)


def cond_expectation_blockmean(pair: DivisorPair, a: Any) -> Matrix:
    """P_{k,n}(a) = pi_{k,n}((k/n) * sum_i B_i), the image of the mean diagonal block."""
    array = _square_of_size(pair, a)
    return embed_kron(pair, block_decomposition(pair, array).mean())


def cond_expectation_basis(pair: DivisorPair, a: Any) -> Matrix:
    """P_{k,n}(a) = sum over b in B_{k,n} of (<a, b> / <b, b>) b."""
    array = _square_of_size(pair, a)
    out = np.zeros((pair.n, pair.n), dtype=np.complex128)
    for b in basis_B(pair):
        out += (hs_inner(array, b) / hs_inner(b, b)) * b
    return out


def project_hermitian(pair: DivisorPair, a: HermitianMatrix) -> HermitianMatrix:
    """P_{k,n} restricted to self-adjoint input."""
    return HermitianMatrix.from_array(cond_expectation(pair, a))


def check_expectation_axioms(
    pair: DivisorPair, a: Any, b_small: Any, c_small: Any
) -> Dict[str, float]:
    """Residuals of the conditional-expectation axioms for one draw.

    ``b_small`` and ``c_small`` are k-by-k and enter through pi_{k,n}. Every
    residual is >= 0, with 0 meaning the property holds exactly.
    """
    array = _square_of_size(pair, a)
    b = embed(pair, b_small)
    c = embed(pair, c_small)
    projected = cond_expectation(pair, array)
    positive = cond_expectation(pair, array @ array.conj().T)
    smallest = float(eigh(HermitianMatrix.from_array((positive + positive.conj().T) / 2)).eigenvalues[0])
    scalar = DivisorPair(1, pair.n)
    residual = array - projected
    return {
        "positivity": max(0.0, -smallest),
        "contractivity": max(0.0, operator_norm(projected) - operator_norm(array)),
        "module": float(np.max(np.abs(cond_expectation(pair, b @ array @ c) - b @ projected @ c))),
        "fixed_point": float(np.max(np.abs(cond_expectation(pair, b) - b))),
        "idempotence": float(np.max(np.abs(cond_expectation(pair, projected) - projected))),
        "trace": abs(normalized_trace(projected) - normalized_trace(array)),
        "orthogonality": max(abs(hs_inner(residual, basis)) for basis in basis_B(pair)),
        "tower": float(
            np.max(
                np.abs(
                    cond_expectation(scalar, projected) - cond_expectation(scalar, array)
                )
            )
        ),
    }


__all__ = [
    "check_expectation_axioms",
    "cond_expectation",
    "cond_expectation_basis",
    "cond_expectation_blockmean",
    "project_hermitian",
]
