"""Exception types raised by the qmetric package."""
from __future__ import annotations


class QMetricError(Exception):
    """Base class for every error raised deliberately by qmetric."""


class DimensionError(QMetricError, ValueError):
    """Operands have incompatible shapes."""


class DomainError(QMetricError, ValueError):
    """An input violates a structural invariant (Hermitian, unitary, k | n, ...)."""


class ConvergenceError(QMetricError, RuntimeError):
    """An iterative routine exhausted its budget without meeting its tolerance."""


__all__ = ["ConvergenceError", "DimensionError", "DomainError", "QMetricError"]
