from __future__ import annotations

from pathlib import Path
from typing import Any, Callable

import pytest

from qmetric.ingestion import MatrixWriter


@pytest.fixture
def write_matrix(tmp_path: Path) -> Callable[[str, Any], Path]:
    """Write a matrix into the shared JSON format under tmp_path and return its path."""
    writer = MatrixWriter()

    def _write(name: str, matrix: Any) -> Path:
        return writer.dump(matrix, tmp_path / name)

    return _write
