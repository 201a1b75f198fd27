"""Validation rules for CLI run configurations."""
from __future__ import annotations

from typing import List

from ..models import Command, LipVariant, RunConfig, ValidationResult
from ..verification.suites import SUITE_CHECKS

SUITES = tuple(SUITE_CHECKS)
PROPER_K_SUITES = {"isometry"}


class RunConfigValidator:
    """Collects every violation in a RunConfig instead of stopping at the first."""

    MAX_N = 256
    LIP_COMMANDS = frozenset({Command.CERTIFY, Command.VERIFY, Command.LIPNORM})

    def validate(self, config: RunConfig) -> ValidationResult:
        errors: List[str] = []
        warnings: List[str] = []

        if config.trials < 1:
            errors.append(f"trials must be >= 1 (trials={config.trials})")
        if config.workers < 1:
            errors.append(f"workers must be >= 1 (workers={config.workers})")
        if not config.tol > 0:
            errors.append(f"tol must be positive (tol={config.tol})")
        if config.seed < 0 or config.seed >= 2**64:
            errors.append(f"seed must be an unsigned 64-bit integer (seed={config.seed})")

        command = config.command
        if command is Command.MK:
            self._check_mk(config, errors)
        else:
            self._check_n(config, errors)

        if command is Command.CERTIFY:
            if config.all_k:
                if config.k is not None:
                    warnings.append("--k is ignored with --all-k")
            else:
                self._check_proper_k(config, errors)
        elif command is Command.VERIFY:
            suite = config.suite
            if suite != "all" and suite not in SUITES:
                errors.append(f"unknown suite '{suite}'; expected one of {', '.join(SUITES)} or all")
            elif suite in PROPER_K_SUITES:
                self._check_proper_k(config, errors)
            elif config.k is not None:
                self._check_divides(config, errors)
        elif command in (Command.EMBED, Command.PROJECT):
            if config.k is None:
                errors.append(f"{command.value} needs --k")
            else:
                self._check_divides(config, errors)
            if not config.input_path:
                errors.append(f"{command.value} needs an input matrix file")
        elif command is Command.LIPNORM:
            if config.variant is LipVariant.DIVISOR:
                self._check_proper_k(config, errors)
            elif config.k is not None:
                warnings.append("--k is ignored by the trace Lip-norm")
            if not config.input_path:
                errors.append("lipnorm needs an input matrix file")

        return ValidationResult(
            subject=command.value, is_valid=not errors, errors=errors, warnings=warnings
        )

    def _check_n(self, config: RunConfig, errors: List[str]) -> None:
        if config.n is None:
            errors.append(f"{config.command.value} needs --n")
        elif not 1 <= config.n <= self.MAX_N:
            errors.append(f"n must lie in 1..{self.MAX_N} (n={config.n})")
        elif config.n < 2 and config.command in self.LIP_COMMANDS:
            errors.append(f"{config.command.value} needs n >= 2 (n={config.n})")

    def _check_divides(self, config: RunConfig, errors: List[str]) -> None:
        if config.n is None or config.k is None:
            return
        if config.k < 1:
            errors.append(f"k must be positive (k={config.k})")
        elif config.n % config.k:
            errors.append(f"k must divide n (k={config.k}, n={config.n})")

    def _check_proper_k(self, config: RunConfig, errors: List[str]) -> None:
        if config.k is None:
            errors.append(f"{config.command.value} needs --k")
            return
        if config.n is None:
            return
        before = len(errors)
        self._check_divides(config, errors)
        if len(errors) == before and not 1 < config.k < config.n:
            errors.append(f"k must satisfy 1 < k < n (k={config.k}, n={config.n})")

    def _check_mk(self, config: RunConfig, errors: List[str]) -> None:
        if not config.rho_path or not config.sigma_path:
            errors.append("mk needs --rho and --sigma state files")
        if config.variant is LipVariant.DIVISOR and config.k is None:
            errors.append("mk with --variant k needs --k")
        if config.max_iters < 1:
            errors.append(f"max-iters must be >= 1 (max_iters={config.max_iters})")
        if not config.mk_tol > 0:
            errors.append(f"mk-tol must be positive (mk_tol={config.mk_tol})")


__all__ = ["RunConfigValidator", "SUITES"]
