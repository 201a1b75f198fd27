from __future__ import annotations

import numpy as np
import pytest

from qmetric.distance import diagonal_constraints, grid_search_oracle, mk_diagonal_oracle
from qmetric.errors import DimensionError, DomainError
from qmetric.lipnorms import lip_eval_diagonal
from qmetric.models import LipSpec


def test_trace_two_orthogonal_pure_states():
    assert mk_diagonal_oracle(LipSpec.trace(2), [1.0, -1.0]) == pytest.approx(2.0, abs=1e-9)


def test_divisor_corner_states():
    assert mk_diagonal_oracle(LipSpec.divisor(4, 2), [1.0, 0.0, 0.0, -1.0]) == pytest.approx(
        2.0, abs=1e-9
    )


def test_zero_delta():
    assert mk_diagonal_oracle(LipSpec.trace(3), np.zeros(3)) == 0.0


def test_matches_grid_search_on_three_points():
    spec = LipSpec.trace(3)
    delta = [2.0, -1.0, -1.0]
    value = mk_diagonal_oracle(spec, delta)
    assert value == pytest.approx(3.0, abs=1e-9)
    assert abs(grid_search_oracle(spec, delta) - value) <= 1e-6


def test_grid_search_is_limited_to_tiny_dimensions():
    with pytest.raises(DomainError):
        grid_search_oracle(LipSpec.trace(4), [1.0, -1.0, 0.0, 0.0])


def test_rejects_delta_with_nonzero_sum():
    with pytest.raises(DomainError, match="sum to zero"):
        mk_diagonal_oracle(LipSpec.trace(2), [1.0, 0.0])


def test_rejects_wrong_length():
    with pytest.raises(DimensionError):
        mk_diagonal_oracle(LipSpec.trace(3), [1.0, -1.0])


@pytest.mark.parametrize("spec", [LipSpec.trace(4), LipSpec.divisor(4, 2), LipSpec.divisor(6, 3)], ids=str)
def test_constraint_rows_reproduce_lip_norm(spec):
    rng = np.random.default_rng(spec.n)
    for _ in range(20):
        values = rng.standard_normal(spec.n)
        values -= values.mean()
        rows = diagonal_constraints(spec)
        assert np.max(np.abs(rows @ values)) == pytest.approx(lip_eval_diagonal(spec, values), rel=1e-12)


def test_divisor_distance_is_dominated_by_trace_distance():
    rng = np.random.default_rng(0)
    for n, k in [(4, 2), (6, 2), (6, 3)]:
        for _ in range(10):
            delta = rng.dirichlet(np.ones(n)) - rng.dirichlet(np.ones(n))
            delta -= delta.mean()
            trace_value = mk_diagonal_oracle(LipSpec.trace(n), delta)
            divisor_value = mk_diagonal_oracle(LipSpec.divisor(n, k), delta)
            assert divisor_value <= trace_value + 1e-9
            assert trace_value <= np.sum(np.abs(delta)) + 1e-9


def test_triangle_inequality_on_diagonal_triples():
    rng = np.random.default_rng(1)
    for spec in (LipSpec.trace(4), LipSpec.divisor(4, 2), LipSpec.divisor(6, 2)):
        for _ in range(10):
            rho, sigma, tau = (rng.dirichlet(np.ones(spec.n)) for _ in range(3))

            def distance(x, y):
                delta = x - y
                return mk_diagonal_oracle(spec, delta - delta.mean())

            assert distance(rho, tau) <= distance(rho, sigma) + distance(sigma, tau) + 1e-6
