"""Dense complex matrix arithmetic and the Hermitian eigensolver."""
from .core import (
    adjoint,
    conjugate_by_unitary,
    is_hermitian,
    is_unitary,
    jordan,
    lie,
    matrix_unit,
    max_abs_diagonal_norm,
    operator_norm,
    power_iteration_norm,
    random_hermitian,
    random_matrix,
    random_unitary,
    trace_norm,
)
from .jacobi import eigh, off_diagonal_norm

__all__ = [
    "adjoint",
    "conjugate_by_unitary",
    "eigh",
    "is_hermitian",
    "is_unitary",
    "jordan",
    "lie",
    "matrix_unit",
    "max_abs_diagonal_norm",
    "off_diagonal_norm",
    "operator_norm",
    "power_iteration_norm",
    "random_hermitian",
    "random_matrix",
    "random_unitary",
    "trace_norm",
]
