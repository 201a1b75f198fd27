from __future__ import annotations

import csv
import io
import json
import logging
import math

import pytest

from qmetric.models import CheckResult, Report
from qmetric.observability import (
    JsonFormatter,
    persist_report,
    render_text,
    report_to_dict,
    report_to_json,
    write_csv,
)


def _report() -> Report:
    return Report(
        command="verify",
        seed=7,
        version="0.1.0",
        config={"n": 4},
        checks=[
            CheckResult.at_most("trace.b", 1e-14, 1e-12, suite="trace", trial=1, n=4, k=2),
            CheckResult.at_most("trace.a", 2e-13, 1e-12, suite="trace", trial=0, n=4, k=2),
        ],
        results={"suites": [{"suite": "trace", "checks": 2, "failed": 0}]},
        wall_time=0.25,
    )


def test_check_result_at_most():
    assert CheckResult.at_most("x", 1e-10, 1e-9).passed
    assert not CheckResult.at_most("x", 1e-8, 1e-9).passed
    assert not CheckResult.at_most("x", math.nan, 1e-9).passed


def test_results_are_merged_into_the_envelope_and_checks_sorted():
    payload = report_to_dict(_report())
    assert payload["suites"][0]["suite"] == "trace"
    assert [check["trial"] for check in payload["checks"]] == [0, 1]
    assert payload["passed"] is True
    assert "results" not in payload


def test_result_keys_may_not_shadow_envelope():
    report = _report()
    report.results["seed"] = 1
    with pytest.raises(ValueError, match="clash"):
        report_to_dict(report)


def test_json_floats_round_trip():
    value = 0.1 + 0.2
    report = _report()
    report.results["value"] = value
    assert json.loads(report_to_json(report))["value"] == value


def test_non_finite_residuals_serialize_as_strings():
    report = _report()
    report.checks.append(CheckResult.at_most("crash", math.inf, 1e-9, suite="trace", trial=2))
    payload = json.loads(report_to_json(report))
    assert payload["checks"][-1]["residual"] == "inf"
    assert report.exit_status == 1


def test_csv_schema():
    handle = io.StringIO()
    write_csv(_report(), handle)
    rows = list(csv.reader(io.StringIO(handle.getvalue())))
    assert rows[0] == ["suite", "n", "k", "trial", "residual", "tolerance", "pass"]
    assert rows[1][:4] == ["trace", "4", "2", "0"]
    assert float(rows[1][4]) == 2e-13
    assert rows[2][6] == "true"


def test_persist_report_picks_format_from_suffix(tmp_path):
    persist_report(_report(), tmp_path / "out" / "report.json")
    persist_report(_report(), tmp_path / "out" / "report.csv")
    assert json.loads((tmp_path / "out" / "report.json").read_text())["command"] == "verify"
    assert (tmp_path / "out" / "report.csv").read_text().startswith("suite,n,k,trial")


def test_render_text_mentions_status():
    text = render_text(_report())
    assert "status: PASS" in text
    assert "2 run, 0 failed" in text


def test_json_formatter_copies_extra_fields():
    record = logging.LogRecord("qmetric", logging.INFO, __file__, 1, "Suite finished", (), None)
    record.suite = "trace"
    record.trial = 3
    payload = json.loads(JsonFormatter().format(record))
    assert payload["message"] == "Suite finished"
    assert payload["suite"] == "trace"
    assert payload["trial"] == 3
    assert payload["level"] == "INFO"
