"""Quantum metric structures on full matrix algebras M_n(C)."""

__version__ = "0.1.0"

from .distance import MKOptions, mk_distance, mk_diagonal_oracle
from .errors import ConvergenceError, DimensionError, DomainError, QMetricError
from .lipnorms import certify_non_isometry, lip_eval, witness
from .maps import cond_expectation, embed, normalized_trace
from .models import DensityState, DivisorPair, HermitianMatrix, LipSpec, LipVariant

__all__ = [
    "ConvergenceError",
    "DensityState",
    "DimensionError",
    "DivisorPair",
    "DomainError",
    "HermitianMatrix",
    "LipSpec",
    "LipVariant",
    "MKOptions",
    "QMetricError",
    "__version__",
    "certify_non_isometry",
    "cond_expectation",
    "embed",
    "lip_eval",
    "mk_diagonal_oracle",
    "mk_distance",
    "normalized_trace",
    "witness",
]
