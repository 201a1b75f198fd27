from __future__ import annotations

import json

import numpy as np
import pytest

from qmetric.errors import DimensionError, DomainError
from qmetric.ingestion import MatrixReader, MatrixWriter, matrix_from_dict, matrix_to_dict
from qmetric.linalg import random_matrix


def test_round_trip_is_entrywise_exact(tmp_path):
    matrix = random_matrix(5, seed=17) / 3.0
    path = MatrixWriter().dump(matrix, tmp_path / "nested" / "m.json")
    np.testing.assert_array_equal(MatrixReader().load(path), matrix)


def test_format_is_row_major():
    payload = matrix_to_dict(np.array([[1.0, 2j], [3.0, 4.0]]))
    assert payload == {
        "n_rows": 2,
        "n_cols": 2,
        "entries": [[1.0, 0.0], [0.0, 2.0], [3.0, 0.0], [4.0, 0.0]],
    }


def test_length_mismatch_is_rejected():
    with pytest.raises(DimensionError, match="entries has length 3"):
        matrix_from_dict({"n_rows": 2, "n_cols": 2, "entries": [[1, 0], [0, 0], [0, 0]]})


def test_non_finite_entries_are_rejected(tmp_path):
    path = tmp_path / "nan.json"
    path.write_text(json.dumps({"n_rows": 1, "n_cols": 1, "entries": [[float("nan"), 0.0]]}))
    with pytest.raises(DomainError, match="not finite"):
        MatrixReader().load(path)


def test_missing_keys_are_rejected():
    with pytest.raises(DomainError, match="n_rows"):
        matrix_from_dict({"entries": []})


def test_unsupported_extension(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("1,2\n")
    with pytest.raises(DomainError, match="Unsupported file type"):
        MatrixReader().load(path)


def test_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    with pytest.raises(DomainError, match="not valid JSON"):
        MatrixReader().load(path)


def test_load_state_checks_density_invariants(write_matrix):
    good = write_matrix("rho.json", np.diag([0.75, 0.25]))
    assert MatrixReader().load_state(good).n == 2
    bad = write_matrix("bad.json", np.diag([0.75, 0.75]))
    with pytest.raises(DomainError, match="trace 1"):
        MatrixReader().load_state(bad)
