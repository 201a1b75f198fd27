from __future__ import annotations

from qmetric.models import CheckResult
from qmetric.orchestration import SuiteRunner, TrialContext, trial_seed
from qmetric.verification import SUITE_CHECKS, suites_for


def _residuals(report):
    return [(check.trial, check.name, check.residual) for check in report.checks]


def test_trial_seed_is_xor():
    assert trial_seed(7, 3) == 4
    assert trial_seed(0, 5) == 5


def test_parallel_and_serial_runs_agree():
    serial = SuiteRunner(workers=1).run(
        "leibniz", SUITE_CHECKS["leibniz"], n=4, k=2, trials=8, seed=11, tol=1e-9
    )
    parallel = SuiteRunner(workers=4).run(
        "leibniz", SUITE_CHECKS["leibniz"], n=4, k=2, trials=8, seed=11, tol=1e-9
    )
    assert _residuals(serial) == _residuals(parallel)
    assert serial.passed


def test_crashing_trial_is_recorded_as_failure():
    def flaky(context: TrialContext):
        if context.trial == 1:
            raise RuntimeError("boom")
        return [CheckResult.at_most("ok", 0.0, 1e-9, suite=context.suite, trial=context.trial)]

    report = SuiteRunner().run("flaky", flaky, n=2, k=None, trials=3, seed=0, tol=1e-9)
    assert report.crashed_trials == [1]
    assert not report.passed
    assert [check.trial for check in report.checks] == [0, 1, 2]


def test_suites_for_all_lists_every_suite():
    assert suites_for("all") == list(SUITE_CHECKS)
    assert suites_for("trace") == ["trace"]


def test_every_suite_passes_a_few_trials():
    for suite, check in SUITE_CHECKS.items():
        report = SuiteRunner().run(suite, check, n=4, k=2, trials=3, seed=5, tol=1e-9)
        failures = [c.summary() for c in report.checks if not c.passed]
        assert not failures, (suite, failures)
