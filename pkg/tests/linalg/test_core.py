from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmetric.errors import DimensionError, DomainError
from qmetric.linalg import (
    adjoint,
    conjugate_by_unitary,
    is_hermitian,
    is_unitary,
    jordan,
    lie,
    matrix_unit,
    max_abs_diagonal_norm,
    operator_norm,
    power_iteration_norm,
    random_hermitian,
    random_matrix,
    random_unitary,
    trace_norm,
)
from qmetric.models import HermitianMatrix

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_operator_norm_of_diagonal_is_max_abs_entry():
    assert operator_norm(np.diag([3.0, -5.0, 1.0])) == 5.0
    assert max_abs_diagonal_norm(np.diag([3.0, -5.0, 1.0])) == 5.0


def test_max_abs_diagonal_norm_rejects_off_diagonal_input():
    with pytest.raises(DomainError):
        max_abs_diagonal_norm(np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_operator_norm_of_nilpotent():
    assert operator_norm(np.array([[0.0, 1.0], [0.0, 0.0]])) == pytest.approx(1.0, abs=1e-12)


def test_operator_norm_rejects_rectangular_input():
    with pytest.raises(DimensionError):
        operator_norm(np.ones((2, 3)))


@pytest.mark.parametrize("seed", range(5))
def test_operator_norm_matches_numpy(seed):
    a = random_matrix(6, seed)
    expected = np.linalg.norm(a, 2)
    assert operator_norm(a) == pytest.approx(expected, rel=1e-9)


@pytest.mark.parametrize("seed", range(10))
def test_power_iteration_agrees_with_eigensolver(seed):
    a = random_matrix(8, seed)
    norm = operator_norm(a)
    assert abs(power_iteration_norm(a, seed=seed) - norm) <= 1e-7 * max(1.0, norm)


@settings(max_examples=25, deadline=None)
@given(n=st.integers(min_value=1, max_value=6), seed=seeds)
def test_cstar_identity_and_submultiplicativity(n, seed):
    a = random_matrix(n, seed)
    b = random_matrix(n, seed + 1)
    norm_a = operator_norm(a)
    assert abs(operator_norm(adjoint(a) @ a) - norm_a**2) <= 1e-8 * (1.0 + norm_a**2)
    assert operator_norm(a @ b) <= norm_a * operator_norm(b) + 1e-9


def test_trace_norm():
    assert trace_norm(HermitianMatrix.diagonal([1.0, -2.0])) == 3.0
    assert trace_norm(np.array([[0.0, 1.0], [1.0, 0.0]])) == pytest.approx(2.0, abs=1e-14)


def test_jordan_and_lie_products():
    a = random_hermitian(4, seed=1)
    np.testing.assert_allclose(jordan(a, a).data, a.data @ a.data, atol=1e-12)
    np.testing.assert_allclose(lie(a, a).data, np.zeros((4, 4)), atol=1e-12)
    b = random_hermitian(4, seed=2)
    assert is_hermitian(jordan(a, b)) and is_hermitian(lie(a, b))


def test_lie_product_of_pauli_matrices():
    x = np.array([[0.0, 1.0], [1.0, 0.0]])
    y = np.array([[0.0, -1j], [1j, 0.0]])
    z = np.diag([1.0, -1.0])
    np.testing.assert_allclose(lie(x, y).data, z, atol=1e-15)


def test_matrix_unit_is_one_based():
    unit = matrix_unit(3, 1, 2)
    assert unit[0, 1] == 1.0
    assert np.count_nonzero(unit) == 1
    with pytest.raises(DomainError):
        matrix_unit(3, 0, 1)


def test_random_unitary_is_unitary_and_deterministic():
    u = random_unitary(5, seed=42)
    assert is_unitary(u)
    np.testing.assert_allclose(np.linalg.norm(u, axis=0), np.ones(5), atol=1e-10)
    np.testing.assert_array_equal(u, random_unitary(5, seed=42))
    assert not np.array_equal(u, random_unitary(5, seed=43))


def test_conjugation_preserves_hermiticity_and_norm():
    u = random_unitary(6, seed=5)
    a = random_hermitian(6, seed=6)
    rotated = conjugate_by_unitary(u, a)
    assert isinstance(rotated, HermitianMatrix)
    assert abs(operator_norm(rotated) - operator_norm(a)) <= 1e-9


def test_conjugation_rejects_non_unitary():
    with pytest.raises(DomainError, match="not unitary"):
        conjugate_by_unitary(2 * np.eye(3), np.eye(3))


def test_conjugation_by_permutation_permutes_diagonal():
    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    rotated = conjugate_by_unitary(swap, HermitianMatrix.diagonal([2.0, 0.0]))
    np.testing.assert_array_equal(rotated.real_diagonal(), [0.0, 2.0])


def test_hermitian_matrix_admission():
    almost = np.array([[1.0, 2.0 + 1e-13], [2.0, 0.0]])
    h = HermitianMatrix.from_array(almost)
    assert np.array_equal(h.data, h.data.conj().T)
    with pytest.raises(DomainError):
        HermitianMatrix.from_array(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(DomainError):
        HermitianMatrix.from_array(np.array([[np.nan, 0.0], [0.0, 1.0]]))
    with pytest.raises(DimensionError):
        HermitianMatrix.from_array(np.ones((2, 3)))


def test_hermitian_matrix_arithmetic():
    a = HermitianMatrix.diagonal([1.0, 2.0])
    b = HermitianMatrix.identity(2)
    np.testing.assert_array_equal((a + b).real_diagonal(), [2.0, 3.0])
    np.testing.assert_array_equal((a - b).real_diagonal(), [0.0, 1.0])
    np.testing.assert_array_equal((2 * a).real_diagonal(), [2.0, 4.0])
    np.testing.assert_array_equal((-a).real_diagonal(), [-1.0, -2.0])
    with pytest.raises(DomainError):
        a * 1j
    with pytest.raises(DimensionError):
        a + HermitianMatrix.identity(3)
