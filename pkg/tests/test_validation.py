from __future__ import annotations

import pytest

from qmetric.models import Command, LipVariant, RunConfig
from qmetric.validation import SUITES, RunConfigValidator


@pytest.fixture
def validator() -> RunConfigValidator:
    return RunConfigValidator()


def test_valid_certify(validator):
    result = validator.validate(RunConfig(command=Command.CERTIFY, n=4, k=2))
    assert result.is_valid
    assert result.summary() == "certify: valid"


@pytest.mark.parametrize(
    "n,k,message",
    [
        (5, 2, "k must divide n (k=2, n=5)"),
        (4, 4, "1 < k < n"),
        (4, 1, "1 < k < n"),
        (4, None, "needs --k"),
        (None, 2, "needs --n"),
    ],
)
def test_invalid_certify(validator, n, k, message):
    result = validator.validate(RunConfig(command=Command.CERTIFY, n=n, k=k))
    assert not result.is_valid
    assert any(message in error for error in result.errors)


def test_all_k_ignores_k_with_warning(validator):
    result = validator.validate(RunConfig(command=Command.CERTIFY, n=6, k=5, all_k=True))
    assert result.is_valid
    assert result.warnings


def test_collects_every_violation(validator):
    config = RunConfig(command=Command.VERIFY, n=4, k=3, suite="bogus", trials=0, workers=0)
    result = validator.validate(config)
    assert len(result.errors) == 3
    assert "invalid" in result.summary()


def test_known_suites(validator):
    assert set(SUITES) == {
        "cstar", "embed", "trace", "projection", "leibniz", "unitary", "kernel", "spectral", "isometry"
    }
    for suite in SUITES + ("all",):
        config = RunConfig(command=Command.VERIFY, n=6, k=3, suite=suite)
        assert validator.validate(config).is_valid, suite


def test_isometry_suite_needs_proper_divisor(validator):
    result = validator.validate(RunConfig(command=Command.VERIFY, n=6, suite="isometry"))
    assert not result.is_valid


def test_verify_needs_two_dimensions(validator):
    result = validator.validate(RunConfig(command=Command.VERIFY, n=1, suite="cstar"))
    assert any("n >= 2" in error for error in result.errors)


def test_matrix_commands_need_input(validator):
    for command in (Command.EMBED, Command.PROJECT):
        result = validator.validate(RunConfig(command=command, n=4, k=2))
        assert any("input matrix file" in error for error in result.errors)
    assert validator.validate(RunConfig(command=Command.PROJECT, n=4, k=1, input_path="a.json")).is_valid


def test_lipnorm_divisor_variant_needs_k(validator):
    config = RunConfig(command=Command.LIPNORM, n=4, variant=LipVariant.DIVISOR, input_path="a.json")
    assert not validator.validate(config).is_valid


def test_mk_requires_state_files(validator):
    result = validator.validate(RunConfig(command=Command.MK))
    assert any("--rho and --sigma" in error for error in result.errors)
    config = RunConfig(command=Command.MK, rho_path="r.json", sigma_path="s.json")
    assert validator.validate(config).is_valid
