"""Command-line entry point: certificates, verification sweeps and state distances."""
from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from . import __version__
from .distance.solver import MKOptions, mk_distance, pairing
from .errors import QMetricError
from .ingestion.matrix_io import MatrixReader, MatrixWriter, matrix_to_dict
from .lipnorms.certificate import CLOSED_FORM_TOL, certify_non_isometry
from .lipnorms.seminorms import lip_eval
from .maps.embedding import embed, proper_divisors
from .maps.expectation import cond_expectation
from .models import (
    CheckResult,
    Command,
    DivisorPair,
    LipSpec,
    LipVariant,
    OutputFormat,
    Report,
    RunConfig,
    WitnessReport,
)
from .observability.logger import configure_logging
from .observability.reporting import persist_report, render_text, report_to_json, write_csv
from .orchestration.orchestrator import SuiteRunner
from .validation.rules import RunConfigValidator
from .verification.suites import SUITE_CHECKS, suites_for

SEED_ENV = "QMETRIC_SEED"
USAGE_ERROR = 2
FEASIBILITY_TOL = 1e-9

logger = logging.getLogger("qmetric")


def _seed_default() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or not raw.strip():
        return 0
    try:
        return int(raw)
    except ValueError as exc:
        raise QMetricError(f"{SEED_ENV} must be an integer, got {raw!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="Matrix dimension n")
    common.add_argument("--k", type=int, default=None, help="Block size k (must divide n)")
    common.add_argument("--trials", type=int, default=100, help="Random trials per suite")
    common.add_argument(
        "--seed", type=int, default=None, help=f"Base RNG seed (default: ${SEED_ENV} or 0)"
    )
    common.add_argument("--tol", type=float, default=1e-9, help="Default check tolerance")
    common.add_argument(
        "--format",
        dest="output_format",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="Report format on stdout",
    )
    common.add_argument(
        "--json",
        dest="output_format",
        action="store_const",
        const=OutputFormat.JSON.value,
        help="Shorthand for --format json",
    )
    common.add_argument("--out", dest="output_path", default=None, help="Output file")
    common.add_argument("--log", dest="log_path", default=None, help="Optional JSONL log file")
    common.add_argument("--log-level", dest="log_level", default="INFO", help="Logging level")
    common.add_argument("--workers", type=int, default=1, help="Threads used for trials")

    parser = argparse.ArgumentParser(
        prog="qmetric",
        description="Lip-norms on full matrix algebras: certificates, sweeps and state distances",
    )
    parser.add_argument("--version", action="version", version=f"qmetric {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    certify = commands.add_parser(
        Command.CERTIFY.value, parents=[common], help="Certify that L_{n,1} and L_{n,k} differ"
    )
    certify.add_argument(
        "--all-k", dest="all_k", action="store_true", help="Every proper divisor k of n"
    )

    verify = commands.add_parser(
        Command.VERIFY.value, parents=[common], help="Run a randomized invariant sweep"
    )
    verify.add_argument(
        "--suite", required=True, help=f"One of {', '.join(SUITE_CHECKS)} or all"
    )

    mk = commands.add_parser(
        Command.MK.value, parents=[common], help="Lower bound on the distance between two states"
    )
    mk.add_argument("--rho", dest="rho_path", required=True, help="First density matrix file")
    mk.add_argument("--sigma", dest="sigma_path", required=True, help="Second density matrix file")
    mk.add_argument("--variant", choices=[v.value for v in LipVariant], default="1")
    mk.add_argument("--max-iters", dest="max_iters", type=int, default=2000)
    mk.add_argument("--mk-tol", dest="mk_tol", type=float, default=1e-3)

    for command, help_text in (
        (Command.EMBED, "Apply pi_{k,n} to a k-by-k matrix file"),
        (Command.PROJECT, "Apply P_{k,n} to an n-by-n matrix file"),
        (Command.LIPNORM, "Evaluate a Lip-norm on a Hermitian matrix file"),
    ):
        sub = commands.add_parser(command.value, parents=[common], help=help_text)
        sub.add_argument("--input", dest="input_path", required=True, help="Matrix file (.json)")
        if command is Command.LIPNORM:
            sub.add_argument("--variant", choices=[v.value for v in LipVariant], default="1")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    seed = args.seed if args.seed is not None else _seed_default()
    return RunConfig(
        command=Command(args.command),
        n=args.n,
        k=args.k,
        trials=args.trials,
        seed=seed,
        tol=args.tol,
        output_format=OutputFormat(args.output_format),
        input_path=getattr(args, "input_path", None),
        output_path=args.output_path,
        suite=getattr(args, "suite", None),
        variant=LipVariant(getattr(args, "variant", LipVariant.TRACE.value)),
        all_k=getattr(args, "all_k", False),
        workers=args.workers,
        rho_path=getattr(args, "rho_path", None),
        sigma_path=getattr(args, "sigma_path", None),
        max_iters=getattr(args, "max_iters", 2000),
        mk_tol=getattr(args, "mk_tol", 1e-3),
    )


def _new_report(config: RunConfig) -> Report:
    return Report(
        command=config.command.value,
        seed=config.seed,
        version=__version__,
        config=config.echo(),
    )


def _witness_row(witness: WitnessReport) -> Dict[str, Any]:
    return {
        "n": witness.n,
        "k": witness.k,
        "lip1": witness.lip1_value,
        "lipk": witness.lipk_value,
        "gap": witness.gap,
        "closed_form_lip1": str(witness.closed_form_lip1),
        "closed_form_lipk": str(witness.closed_form_lipk),
        "exact_gap": str(witness.exact_gap),
        "certified": witness.certified,
    }


def _witness_checks(witness: WitnessReport) -> List[CheckResult]:
    context = {"suite": "certify", "n": witness.n, "k": witness.k}
    return [
        CheckResult.at_most("lip1_closed_form", witness.lip1_error, CLOSED_FORM_TOL, **context),
        CheckResult.at_most("lipk_closed_form", witness.lipk_error, CLOSED_FORM_TOL, **context),
        CheckResult.at_most("gap_positive", 0.0 if witness.certified else 1.0, 0.0, **context),
    ]


def cmd_certify(config: RunConfig) -> Report:
    report = _new_report(config)
    n = config.n
    ks = proper_divisors(n) if config.all_k else [config.k]
    witnesses = [certify_non_isometry(n, k) for k in ks]
    for witness in witnesses:
        report.checks.extend(_witness_checks(witness))
    if config.all_k:
        report.results["rows"] = [_witness_row(witness) for witness in witnesses]
        if not witnesses:
            logger.warning("n has no proper divisor; nothing to certify", extra={"n": n})
    else:
        report.results.update(_witness_row(witnesses[0]))
        report.results["statement"] = witnesses[0].statement
    return report


def _suite_k(suite: str, config: RunConfig) -> Optional[int]:
    if suite == "isometry":
        k = config.k
        if k is None or not 1 < k < config.n or config.n % k:
            return None
    return config.k


def cmd_verify(config: RunConfig) -> Report:
    report = _new_report(config)
    runner = SuiteRunner(workers=config.workers)
    summaries = []
    for suite in suites_for(config.suite):
        k = _suite_k(suite, config)
        if suite == "isometry" and k is None:
            logger.info("Skipping suite without a proper divisor k", extra={"suite": suite})
            continue
        outcome = runner.run(
            suite,
            SUITE_CHECKS[suite],
            n=config.n,
            k=k,
            trials=config.trials,
            seed=config.seed,
            tol=config.tol,
        )
        report.checks.extend(outcome.checks)
        summaries.append(
            {
                "suite": suite,
                "checks": len(outcome.checks),
                "failed": sum(1 for check in outcome.checks if not check.passed),
                "max_residual": outcome.max_residual,
            }
        )
    report.results["suites"] = summaries
    return report


def _lip_spec(config: RunConfig, n: int) -> LipSpec:
    if config.variant is LipVariant.DIVISOR:
        return LipSpec.divisor(n, config.k)
    return LipSpec.trace(n)


def cmd_mk(config: RunConfig) -> Report:
    report = _new_report(config)
    reader = MatrixReader()
    rho = reader.load_state(config.rho_path)
    sigma = reader.load_state(config.sigma_path)
    if config.n is not None and config.n != rho.n:
        raise QMetricError(f"--n {config.n} does not match the {rho.n}x{rho.n} state files")
    spec = _lip_spec(config, rho.n)
    result = mk_distance(spec, rho, sigma, MKOptions(max_iters=config.max_iters, tol=config.mk_tol))

    context = {"suite": "mk", "n": spec.n, "k": spec.k}
    objective = pairing(rho, result.certificate) - pairing(sigma, result.certificate)
    report.checks.append(
        CheckResult.at_most(
            "certificate_feasible", max(0.0, result.lip_value - 1.0), FEASIBILITY_TOL, **context
        )
    )
    report.checks.append(
        CheckResult.at_most("certificate_value", abs(objective - result.value), FEASIBILITY_TOL, **context)
    )
    if result.oracle_gap is not None:
        report.checks.append(
            CheckResult.at_most("oracle_agreement", result.oracle_gap, config.mk_tol, **context)
        )
    report.results.update(
        {
            "spec": spec.label,
            "value": result.value,
            "converged": result.converged,
            "iterations": result.iterations,
            "oracle_value": result.oracle_value,
            "lip_value": result.lip_value,
            "certificate": matrix_to_dict(result.certificate),
        }
    )
    if config.output_path:
        MatrixWriter().dump(result.certificate, config.output_path)
        logger.info("Certificate written", extra={"path": config.output_path})
    return report


def _write_matrix(config: RunConfig, report: Report, matrix: Any) -> None:
    report.results["matrix"] = matrix_to_dict(matrix)
    if config.output_path:
        MatrixWriter().dump(matrix, config.output_path)
        logger.info("Matrix written", extra={"path": config.output_path})


def cmd_embed(config: RunConfig) -> Report:
    report = _new_report(config)
    a = MatrixReader().load(config.input_path)
    _write_matrix(config, report, embed(DivisorPair(config.k, config.n), a))
    return report


def cmd_project(config: RunConfig) -> Report:
    report = _new_report(config)
    a = MatrixReader().load(config.input_path)
    _write_matrix(config, report, cond_expectation(DivisorPair(config.k, config.n), a))
    return report


def cmd_lipnorm(config: RunConfig) -> Report:
    report = _new_report(config)
    a = MatrixReader().load(config.input_path)
    spec = _lip_spec(config, config.n)
    report.results.update({"spec": spec.label, "value": lip_eval(spec, a)})
    return report


COMMANDS: Dict[Command, Callable[[RunConfig], Report]] = {
    Command.CERTIFY: cmd_certify,
    Command.VERIFY: cmd_verify,
    Command.MK: cmd_mk,
    Command.EMBED: cmd_embed,
    Command.PROJECT: cmd_project,
    Command.LIPNORM: cmd_lipnorm,
}

MATRIX_OUTPUT_COMMANDS = {Command.MK, Command.EMBED, Command.PROJECT}


def emit(report: Report, config: RunConfig) -> None:
    if config.output_format is OutputFormat.JSON:
        sys.stdout.write(report_to_json(report) + "\n")
    elif config.output_format is OutputFormat.CSV:
        write_csv(report, sys.stdout)
    else:
        sys.stdout.write(render_text(report) + "\n")
    if config.output_path and config.command not in MATRIX_OUTPUT_COMMANDS:
        persist_report(report, Path(config.output_path))
        logger.info("Report written", extra={"path": config.output_path})


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    configure_logging(args.log_path, args.log_level.upper())

    try:
        config = config_from_args(args)
    except QMetricError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    validation = RunConfigValidator().validate(config)
    for warning in validation.warnings:
        logger.warning(warning, extra={"command": config.command.value})
    if not validation.is_valid:
        sys.stderr.write(f"error: {validation.summary()}\n")
        return USAGE_ERROR

    logger.info("Running command", extra={"command": config.command.value, "seed": config.seed})
    started = time.perf_counter()
    try:
        report = COMMANDS[config.command](config)
    except (QMetricError, ValueError) as exc:
        logger.error("Command rejected: %s", exc, extra={"command": config.command.value})
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    report.wall_time = time.perf_counter() - started

    emit(report, config)
    if not report.passed:
        logger.warning(
            "Checks failed",
            extra={"command": config.command.value, "failures": len(report.failures)},
        )
    return report.exit_status


__all__ = [
    "COMMANDS",
    "build_parser",
    "cmd_certify",
    "cmd_embed",
    "cmd_lipnorm",
    "cmd_mk",
    "cmd_project",
    "cmd_verify",
    "config_from_args",
    "emit",
    "main",
]
