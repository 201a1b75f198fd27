"""Run-configuration validation."""
from .rules import SUITES, RunConfigValidator

__all__ = ["RunConfigValidator", "SUITES"]
