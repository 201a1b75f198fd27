"""Read and write matrices in the shared JSON matrix format.

{"n_rows": int, "n_cols": int, "entries": [[re, im], ...]}, row-major.
"""
from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Dict

import numpy as np

from ..errors import DimensionError, DomainError
from ..models import DensityState, Matrix, as_matrix


def matrix_to_dict(matrix: Any) -> Dict[str, Any]:
    array = as_matrix(matrix)
    rows, cols = array.shape
    return {
        "n_rows": int(rows),
        "n_cols": int(cols),
        "entries": [[float(value.real), float(value.imag)] for value in array.reshape(-1)],
    }


def matrix_from_dict(payload: Dict[str, Any]) -> Matrix:
    try:
        rows = int(payload["n_rows"])
        cols = int(payload["n_cols"])
        entries = payload["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"matrix payload needs n_rows, n_cols and entries: {exc}") from exc
    if rows < 1 or cols < 1:
        raise DimensionError(f"matrix dimensions must be positive ({rows}x{cols})")
    if len(entries) != rows * cols:
        raise DimensionError(
            f"entries has length {len(entries)}, expected n_rows * n_cols = {rows * cols}"
        )
    values = []
    for index, entry in enumerate(entries):
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise DomainError(f"entry {index} must be a [re, im] pair, got {entry!r}")
        re, im = float(entry[0]), float(entry[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise DomainError(f"entry {index} is not finite: [{re}, {im}]")
        values.append(complex(re, im))
    return np.array(values, dtype=np.complex128).reshape(rows, cols)


class MatrixReader:
    """Loads matrices and density states from JSON matrix files."""

    SUPPORTED_EXTENSIONS = {".json"}

    def __init__(self, encoding: str = "utf-8") -> None:
        self.encoding = encoding

    def load(self, file_path: str | Path) -> Matrix:
        path = Path(file_path)
        if path.suffix.lower() not in self.SUPPORTED_EXTENSIONS:
            raise DomainError(
                f"Unsupported file type '{path.suffix}'. Expected one of {self.SUPPORTED_EXTENSIONS}."
            )
        try:
            payload = json.loads(path.read_text(encoding=self.encoding))
        except OSError as exc:
            raise DomainError(f"cannot read matrix file '{path}': {exc}") from exc
        except json.JSONDecodeError as exc:
            raise DomainError(f"matrix file '{path}' is not valid JSON: {exc}") from exc
        return matrix_from_dict(payload)

    def load_state(self, file_path: str | Path) -> DensityState:
        return DensityState.from_array(self.load(file_path))


class MatrixWriter:
    """Writes matrices as JSON matrix files; floats keep full double precision."""

    def __init__(self, encoding: str = "utf-8") -> None:
        self.encoding = encoding

    def dump(self, matrix: Any, file_path: str | Path) -> Path:
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(matrix_to_dict(matrix)) + "\n", encoding=self.encoding)
        return path


__all__ = ["MatrixReader", "MatrixWriter", "matrix_from_dict", "matrix_to_dict"]
