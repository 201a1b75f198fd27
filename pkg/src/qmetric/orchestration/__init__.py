"""Seeded, optionally parallel execution of verification trials."""
from .orchestrator import SuiteReport, SuiteRunner, TrialCheck, TrialContext, trial_seed

__all__ = ["SuiteReport", "SuiteRunner", "TrialCheck", "TrialContext", "trial_seed"]
