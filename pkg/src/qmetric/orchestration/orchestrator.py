"""Trial orchestration for verification sweeps."""
from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from ..models import CheckResult


@dataclass(frozen=True, slots=True)
class TrialContext:
    """Inputs of one trial; ``seed`` is already derived as base seed XOR trial index."""

    suite: str
    n: int
    k: Optional[int]
    trial: int
    seed: int
    tol: float


TrialCheck = Callable[[TrialContext], List[CheckResult]]


@dataclass(slots=True)
class SuiteReport:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)
    crashed_trials: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.crashed_trials and all(check.passed for check in self.checks)

    @property
    def max_residual(self) -> float:
        return max((check.residual for check in self.checks), default=0.0)


def trial_seed(seed: int, trial: int) -> int:
    """Per-trial RNG seed; identical whether trials run serially or in parallel."""
    return seed ^ trial


class SuiteRunner:
    """Runs a trial check over a seeded range of trials and aggregates the results."""

    def __init__(self, workers: int = 1, logger: logging.Logger | None = None) -> None:
        self.workers = max(1, workers)
        self.logger = logger or logging.getLogger(self.__class__.__name__)

    def _run_trial(self, check: TrialCheck, context: TrialContext) -> List[CheckResult]:
        try:
            return check(context)
        except Exception as exc:
            self.logger.exception(
                "Trial crashed: %s", exc, extra={"suite": context.suite, "trial": context.trial}
            )
            return [
                CheckResult(
                    name=f"{context.suite}.crash",
                    residual=math.inf,
                    tolerance=context.tol,
                    passed=False,
                    suite=context.suite,
                    trial=context.trial,
                    n=context.n,
                    k=context.k,
                )
            ]

    def run(
        self,
        suite: str,
        check: TrialCheck,
        *,
        n: int,
        k: Optional[int],
        trials: int,
        seed: int,
        tol: float,
    ) -> SuiteReport:
        contexts = [
            TrialContext(suite=suite, n=n, k=k, trial=trial, seed=trial_seed(seed, trial), tol=tol)
            for trial in range(trials)
        ]
        if self.workers > 1 and trials > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                batches = list(pool.map(lambda context: self._run_trial(check, context), contexts))
        else:
            batches = [self._run_trial(check, context) for context in contexts]

        report = SuiteReport(suite=suite)
        for context, batch in zip(contexts, batches):
            report.checks.extend(batch)
            if any(result.name.endswith(".crash") for result in batch):
                report.crashed_trials.append(context.trial)
        report.checks.sort(key=lambda result: (result.trial, result.name))

        failures = sum(1 for result in report.checks if not result.passed)
        log = self.logger.warning if failures else self.logger.info
        log(
            "Suite finished: %d checks, %d failed",
            len(report.checks),
            failures,
            extra={"suite": suite, "n": n, "k": k, "trials": trials},
        )
        return report


__all__ = ["SuiteReport", "SuiteRunner", "TrialCheck", "TrialContext", "trial_seed"]
