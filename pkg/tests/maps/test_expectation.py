from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmetric.errors import DimensionError
from qmetric.linalg import random_hermitian, random_matrix
from qmetric.maps import (
    check_expectation_axioms,
    cond_expectation,
    cond_expectation_basis,
    cond_expectation_blockmean,
    divisor_pairs,
    project_hermitian,
)
from qmetric.models import DivisorPair, HermitianMatrix
from qmetric.verification import AXIOM_TOLERANCES

PAIRS = [pair for n in (4, 6, 8, 12) for pair in divisor_pairs(n)]


def test_scalar_expectation_is_normalized_trace():
    projected = cond_expectation(DivisorPair(1, 4), np.diag([1.0, 0.0, 0.0, 0.0]))
    np.testing.assert_allclose(projected, 0.25 * np.eye(4), atol=1e-15)


def test_full_expectation_is_identity_map():
    a = random_matrix(4, seed=0)
    np.testing.assert_array_equal(cond_expectation(DivisorPair(4, 4), a), a)


def test_coordinate_formula_by_hand():
    a = np.arange(16, dtype=float).reshape(4, 4)
    projected = cond_expectation(DivisorPair(2, 4), a)
    mean_block = np.array([[5.0, 6.0], [9.0, 10.0]])
    expected = np.kron(np.eye(2), mean_block)
    np.testing.assert_allclose(projected, expected, atol=1e-14)


def test_random_six_by_six_block_three():
    pair = DivisorPair(3, 6)
    a = random_matrix(6, seed=21)
    assert np.max(np.abs(cond_expectation_blockmean(pair, a) - cond_expectation(pair, a))) <= 1e-14


def test_random_eight_by_eight_basis_form():
    pair = DivisorPair(4, 8)
    a = random_matrix(8, seed=8)
    assert np.max(np.abs(cond_expectation_basis(pair, a) - cond_expectation_blockmean(pair, a))) <= 1e-13


@pytest.mark.parametrize("pair", PAIRS, ids=str)
def test_three_forms_agree(pair):
    for seed in range(100):
        a = random_matrix(pair.n, seed)
        coordinate = cond_expectation(pair, a)
        assert np.max(np.abs(cond_expectation_blockmean(pair, a) - coordinate)) <= 1e-13
        assert np.max(np.abs(cond_expectation_basis(pair, a) - coordinate)) <= 1e-13


def _assert_axioms(pair, seeds):
    for seed in seeds:
        a = random_matrix(pair.n, 3 * seed)
        b = random_matrix(pair.k, 3 * seed + 1)
        c = random_matrix(pair.k, 3 * seed + 2)
        residuals = check_expectation_axioms(pair, a, b, c)
        assert set(residuals) == set(AXIOM_TOLERANCES)
        for axiom, residual in residuals.items():
            tolerance = AXIOM_TOLERANCES[axiom]
            if axiom == "module":
                tolerance *= max(1.0, np.linalg.norm(a, 2) * np.linalg.norm(b, 2) * np.linalg.norm(c, 2))
            assert residual <= tolerance, axiom


@pytest.mark.parametrize("pair", PAIRS, ids=str)
def test_expectation_axioms(pair):
    _assert_axioms(pair, range(10))


@pytest.mark.slow
@pytest.mark.parametrize("pair", PAIRS, ids=str)
def test_expectation_axioms_on_a_hundred_inputs(pair):
    _assert_axioms(pair, range(100))


@settings(max_examples=25, deadline=None)
@given(
    pair=st.sampled_from(PAIRS),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
)
def test_projection_of_hermitian_stays_hermitian(pair, seed):
    h = random_hermitian(pair.n, seed)
    projected = project_hermitian(pair, h)
    assert isinstance(projected, HermitianMatrix)
    np.testing.assert_allclose(project_hermitian(pair, projected).data, projected.data, atol=1e-12)


def test_rejects_wrong_size():
    with pytest.raises(DimensionError):
        cond_expectation(DivisorPair(2, 4), np.eye(6))
