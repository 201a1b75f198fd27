"""Algebra maps on M_n(C): pi_{k,n}, tr_n, the trace inner product and P_{k,n}."""
from .embedding import (
    basis_B,
    block_decomposition,
    divisor_pairs,
    embed,
    embed_kron,
    hs_inner,
    normalized_trace,
    proper_divisors,
)
from .expectation import (
    check_expectation_axioms,
    cond_expectation,
    cond_expectation_basis,
    cond_expectation_blockmean,
    project_hermitian,
)

__all__ = [
    "basis_B",
    "block_decomposition",
    "check_expectation_axioms",
    "cond_expectation",
    "cond_expectation_basis",
    "cond_expectation_blockmean",
    "divisor_pairs",
    "embed",
    "embed_kron",
    "hs_inner",
    "normalized_trace",
    "project_hermitian",
    "proper_divisors",
]
