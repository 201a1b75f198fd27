"""Lip-norms on full matrix algebras and the non-isometry certificate."""
from .certificate import (
    certify_non_isometry,
    check_intertwining,
    closed_form_lip1,
    closed_form_lipk,
    exact_gap,
)
from .seminorms import (
    check_kernel,
    check_quasi_leibniz,
    check_seminorm,
    check_unitary_invariance,
    lip_eval,
    lip_eval_diagonal,
    witness,
)

__all__ = [
    "certify_non_isometry",
    "check_intertwining",
    "check_kernel",
    "check_quasi_leibniz",
    "check_seminorm",
    "check_unitary_invariance",
    "closed_form_lip1",
    "closed_form_lipk",
    "exact_gap",
    "lip_eval",
    "lip_eval_diagonal",
    "witness",
]
