"""Render and persist command reports as text, JSON or CSV."""
from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import IO, Any, Dict, Iterable, List

from ..models import CheckResult, Report

CSV_COLUMNS = ("suite", "n", "k", "trial", "residual", "tolerance", "pass")


def _plain(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {key: _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return value


def check_to_dict(check: CheckResult) -> Dict[str, Any]:
    return {
        "name": check.name,
        "suite": check.suite,
        "n": check.n,
        "k": check.k,
        "trial": check.trial,
        "residual": check.residual,
        "tolerance": check.tolerance,
        "pass": check.passed,
    }


def sorted_checks(checks: Iterable[CheckResult]) -> List[CheckResult]:
    """Checks ordered by (suite, trial, name) so parallel runs serialize identically."""
    return sorted(
        checks,
        key=lambda check: (check.suite, -1 if check.trial is None else check.trial, check.name),
    )


RESERVED_KEYS = frozenset({"command", "config", "version", "seed", "passed", "checks", "wall_time"})


def report_to_dict(report: Report) -> Dict[str, Any]:
    """Report as a JSON-ready dict; command results sit at the top level next to the envelope."""
    clashes = RESERVED_KEYS.intersection(report.results)
    if clashes:
        raise ValueError(f"result keys clash with the report envelope: {sorted(clashes)}")
    payload: Dict[str, Any] = {
        "command": report.command,
        "config": report.config,
        "version": report.version,
        "seed": report.seed,
    }
    payload.update(report.results)
    payload["passed"] = report.passed
    payload["checks"] = [check_to_dict(check) for check in sorted_checks(report.checks)]
    payload["wall_time"] = report.wall_time
    return _plain(payload)


def report_to_json(report: Report) -> str:
    return json.dumps(report_to_dict(report), ensure_ascii=False, indent=2)


def write_csv(report: Report, handle: IO[str]) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for check in sorted_checks(report.checks):
        writer.writerow(
            [
                check.suite or check.name,
                "" if check.n is None else check.n,
                "" if check.k is None else check.k,
                "" if check.trial is None else check.trial,
                repr(check.residual),
                repr(check.tolerance),
                "true" if check.passed else "false",
            ]
        )


def render_text(report: Report) -> str:
    """Human-readable table: command payload first, then one line per check."""
    lines = [f"{report.command} (seed {report.seed}, qmetric {report.version})"]
    for key, value in report.results.items():
        if isinstance(value, list):
            lines.append(f"  {key}:")
            lines.extend(f"    {json.dumps(_plain(item))}" for item in value)
        else:
            lines.append(f"  {key}: {value}")
    checks = sorted_checks(report.checks)
    if checks:
        failures = [check for check in checks if not check.passed]
        worst = max(checks, key=lambda check: check.residual / check.tolerance if check.tolerance else 0.0)
        lines.append(f"  checks: {len(checks)} run, {len(failures)} failed; worst: {worst.summary()}")
        lines.extend(f"  {check.summary()}" for check in failures)
    lines.append(f"  status: {'PASS' if report.passed else 'FAIL'} ({report.wall_time:.3f}s)")
    return "\n".join(lines)


def persist_report(report: Report, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if path.suffix.lower() == ".csv":
        with path.open("w", encoding="utf-8", newline="") as handle:
            write_csv(report, handle)
        return
    path.write_text(report_to_json(report) + "\n", encoding="utf-8")


__all__ = [
    "CSV_COLUMNS",
    "RESERVED_KEYS",
    "check_to_dict",
    "persist_report",
    "render_text",
    "report_to_dict",
    "report_to_json",
    "sorted_checks",
    "write_csv",
]
