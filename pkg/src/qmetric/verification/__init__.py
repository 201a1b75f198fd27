"""Randomized invariant sweeps run by ``qmetric verify``."""
from .suites import AXIOM_TOLERANCES, SUITE_CHECKS, suites_for

__all__ = ["AXIOM_TOLERANCES", "SUITE_CHECKS", "suites_for"]
