from __future__ import annotations

from fractions import Fraction

import pytest

from qmetric.errors import DomainError
from qmetric.linalg import random_unitary
from qmetric.linalg.core import conjugate_by_unitary
from qmetric.lipnorms import (
    certify_non_isometry,
    check_intertwining,
    closed_form_lip1,
    closed_form_lipk,
    exact_gap,
    lip_eval,
    witness,
)
from qmetric.maps import proper_divisors
from qmetric.models import LipSpec

VALID_PAIRS = [(n, k) for n in range(2, 65) for k in proper_divisors(n)]


@pytest.mark.parametrize(
    "n,k,lip1,lipk,gap",
    [
        (4, 2, 1.5, 2.0, 0.5),
        (6, 2, 5 / 3, 8 / 3, 1.0),
        (6, 3, 2.5, 4.5, 2.0),
    ],
)
def test_certificate_values(n, k, lip1, lipk, gap):
    report = certify_non_isometry(n, k)
    assert report.lip1_value == pytest.approx(lip1, abs=1e-12)
    assert report.lipk_value == pytest.approx(lipk, abs=1e-12)
    assert report.gap == pytest.approx(gap, abs=1e-12)
    assert report.exact_gap == Fraction(report.closed_form_lipk - report.closed_form_lip1)
    assert report.certified
    assert "not quantum isometric" in report.statement


def test_closed_forms_for_every_pair_up_to_64():
    for n, k in VALID_PAIRS:
        w = witness(n, k)
        assert abs(lip_eval(LipSpec.trace(n), w) - float(closed_form_lip1(n, k))) <= 1e-12
        assert abs(lip_eval(LipSpec.divisor(n, k), w) - float(closed_form_lipk(n, k))) <= 1e-12


def test_gap_is_positive_in_exact_arithmetic():
    for n, k in VALID_PAIRS:
        assert k * (k * (n - k) - (n - 1)) > 0
        assert exact_gap(n, k) > 0
        assert exact_gap(n, k) == Fraction(k * k * (n - k) - k * (n - 1), n)


@pytest.mark.parametrize("n,k", [(5, 2), (4, 4), (4, 1), (7, 3)])
def test_certificate_rejects_invalid_pairs(n, k):
    with pytest.raises(DomainError):
        certify_non_isometry(n, k)


def test_all_proper_divisors_of_six():
    gaps = {k: certify_non_isometry(6, k).exact_gap for k in proper_divisors(6)}
    assert gaps == {2: Fraction(1), 3: Fraction(2)}


def test_intertwining_fails_for_every_unitary():
    n, k = 4, 2
    w = witness(n, k)
    for seed in range(200):
        u = random_unitary(n, seed)
        rotated = conjugate_by_unitary(u, w)
        assert lip_eval(LipSpec.trace(n), rotated) == pytest.approx(1.5, abs=1e-9)
        assert check_intertwining(n, k, u) >= -1e-6


@pytest.mark.slow
def test_intertwining_full_sweep():
    for seed in range(1000):
        assert check_intertwining(4, 2, random_unitary(4, seed)) >= -1e-6
