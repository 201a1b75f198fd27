"""The block-diagonal embedding pi_{k,n}, the normalized trace and the trace inner product."""
from __future__ import annotations

from typing import Any, List

import numpy as np

from ..errors import DimensionError, DomainError
from ..linalg.core import matrix_unit
from ..models import BlockDecomposition, DivisorPair, Matrix, as_matrix


def _require_size(a: np.ndarray, size: int, role: str) -> None:
    if a.shape != (size, size):
        raise DimensionError(f"{role} must be {size}x{size}, got {a.shape[0]}x{a.shape[1]}")


def embed(pair: DivisorPair, a: Any) -> Matrix:
    """pi_{k,n}(a): n/k copies of the k-by-k matrix ``a`` along the block diagonal.

    Entry (p, q) equals a_{1+((p-1) mod k), 1+((q-1) mod k)} when
    floor((p-1)/k) == floor((q-1)/k) and 0 otherwise.
    """
    small = as_matrix(a, square=True)
    _require_size(small, pair.k, "embedded matrix")
    rows, cols = np.indices((pair.n, pair.n))
    same_block = rows // pair.k == cols // pair.k
    out = np.zeros((pair.n, pair.n), dtype=np.complex128)
    out[same_block] = small[rows[same_block] % pair.k, cols[same_block] % pair.k]
    return out


def embed_kron(pair: DivisorPair, a: Any) -> Matrix:
    """Block-assembly form of :func:`embed`, I_{n/k} (x) a."""
    small = as_matrix(a, square=True)
    _require_size(small, pair.k, "embedded matrix")
    return np.kron(np.eye(pair.copies), small).astype(np.complex128)


def normalized_trace(a: Any) -> complex:
    """tr_n(a) = (1/n) sum_j a_{j,j}, the unique tracial state on M_n(C)."""
    array = as_matrix(a, square=True)
    return complex(np.trace(array) / array.shape[0])


def hs_inner(a: Any, b: Any) -> complex:
    """<a, b> = tr_n(b* a)."""
    left = as_matrix(a, square=True)
    right = as_matrix(b, square=True)
    if left.shape != right.shape:
        raise DimensionError(f"dimension mismatch: {left.shape} vs {right.shape}")
    return complex(np.vdot(right, left) / left.shape[0])


def basis_B(pair: DivisorPair) -> List[Matrix]:
    """{pi_{k,n}(E_{k,p,q}) : 1 <= p, q <= k}, an hs-orthogonal basis of the image of pi_{k,n}."""
    return [
        embed(pair, matrix_unit(pair.k, p, q))
        for p in range(1, pair.k + 1)
        for q in range(1, pair.k + 1)
    ]


def block_decomposition(pair: DivisorPair, a: Any) -> BlockDecomposition:
    """Split out the diagonal blocks B_1 ... B_{n/k}, top left to bottom right."""
    array = as_matrix(a, square=True)
    _require_size(array, pair.n, "decomposed matrix")
    k = pair.k
    blocks = tuple(
        array[r * k : (r + 1) * k, r * k : (r + 1) * k].copy() for r in range(pair.copies)
    )
    return BlockDecomposition(pair=pair, blocks=blocks)


def proper_divisors(n: int) -> List[int]:
    """Every k with k | n and 1 < k < n."""
    if n < 1:
        raise DomainError(f"n must be positive (n={n})")
    return [k for k in range(2, n) if n % k == 0]


def divisor_pairs(n: int) -> List[DivisorPair]:
    """Every DivisorPair (k, n), including the degenerate k = 1 and k = n."""
    if n < 1:
        raise DomainError(f"n must be positive (n={n})")
    return [DivisorPair(k, n) for k in range(1, n + 1) if n % k == 0]


__all__ = [
    "basis_B",
    "block_decomposition",
    "divisor_pairs",
    "embed",
    "embed_kron",
    "hs_inner",
    "normalized_trace",
    "proper_divisors",
]
