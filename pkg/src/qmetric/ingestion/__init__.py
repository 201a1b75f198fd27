"""Matrix file ingestion."""
from .matrix_io import MatrixReader, MatrixWriter, matrix_from_dict, matrix_to_dict

__all__ = ["MatrixReader", "MatrixWriter", "matrix_from_dict", "matrix_to_dict"]
