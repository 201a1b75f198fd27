"""Core value types shared across qmetric.

Matrices are carried as ``numpy`` complex128 arrays. Types that carry an
invariant (Hermitian, k | n, density) validate on construction and are
immutable afterwards.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import numpy.typing as npt

from .errors import DimensionError, DomainError

Matrix = npt.NDArray[np.complex128]

DEFAULT_TOL = 1e-9
HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-10
DENSITY_TOL = 1e-10


def as_matrix(value: Any, *, square: bool = False) -> Matrix:
    """Coerce ``value`` to a finite 2-D complex128 array."""
    if isinstance(value, HermitianMatrix):
        return value.data
    array = np.asarray(value, dtype=np.complex128)
    if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {array.shape}")
    if square and array.shape[0] != array.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise DomainError("matrix entries must be finite (NaN/Inf found)")
    return array


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.complex128, copy=True)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, slots=True, eq=False)
class HermitianMatrix:
    """A self-adjoint element of M_n(C).

    Build through :meth:`from_array`; inputs within ``tol`` of Hermitian are
    symmetrized as ``(a + a*) / 2``.
    """

    data: Matrix

    @classmethod
    def from_array(cls, value: Any, tol: float = HERMITIAN_TOL) -> "HermitianMatrix":
        if isinstance(value, HermitianMatrix):
            return value
        array = as_matrix(value, square=True)
        deviation = float(np.max(np.abs(array - array.conj().T)))
        if deviation > tol:
            raise DomainError(
                f"matrix is not Hermitian: max |a - a*| = {deviation:.3e} exceeds {tol:.1e}"
            )
        return cls(data=_frozen((array + array.conj().T) / 2))

    @classmethod
    def diagonal(cls, values: Any) -> "HermitianMatrix":
        reals = np.asarray(values, dtype=float)
        return cls.from_array(np.diag(reals))

    @classmethod
    def identity(cls, n: int) -> "HermitianMatrix":
        return cls(data=_frozen(np.eye(n)))

    @property
    def n(self) -> int:
        return int(self.data.shape[0])

    @property
    def is_diagonal(self) -> bool:
        return not np.any(self.data - np.diag(np.diag(self.data)))

    def real_diagonal(self) -> npt.NDArray[np.float64]:
        return np.real(np.diag(self.data)).copy()

    def __array__(self, dtype: Any = None, copy: Any = None) -> np.ndarray:
        return np.array(self.data, dtype=dtype)

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        _require_same_size(self, other)
        return HermitianMatrix.from_array(self.data + other.data)

    def __sub__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        _require_same_size(self, other)
        return HermitianMatrix.from_array(self.data - other.data)

    def __mul__(self, scalar: float) -> "HermitianMatrix":
        if isinstance(scalar, complex) or not np.isreal(scalar):
            raise DomainError("Hermitian matrices only scale by real numbers")
        return HermitianMatrix(data=_frozen(self.data * float(scalar)))

    __rmul__ = __mul__

    def __neg__(self) -> "HermitianMatrix":
        return self * -1.0


def _require_same_size(a: HermitianMatrix, b: HermitianMatrix) -> None:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")


@dataclass(frozen=True, slots=True, eq=False)
class Spectrum:
    """Eigenvalues in ascending order with the matching unitary eigenvector columns."""

    eigenvalues: npt.NDArray[np.float64]
    eigenvectors: Matrix
    sweeps: int = 0

    def reconstruct(self) -> Matrix:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


@dataclass(frozen=True, slots=True)
class DivisorPair:
    """A validated pair (k, n) with k | n, parameterizing pi_{k,n} and P_{k,n}."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if isinstance(self.k, bool) or isinstance(self.n, bool):
            raise DomainError("k and n must be integers")
        if int(self.k) != self.k or int(self.n) != self.n:
            raise DomainError(f"k and n must be integers (k={self.k}, n={self.n})")
        if self.k < 1 or self.n < 1:
            raise DomainError(f"k and n must be positive (k={self.k}, n={self.n})")
        if self.k > self.n:
            raise DomainError(f"k must not exceed n (k={self.k}, n={self.n})")
        if self.n % self.k:
            raise DomainError(f"k must divide n (k={self.k}, n={self.n})")

    @property
    def copies(self) -> int:
        """Number of diagonal k-by-k blocks, n / k."""
        return self.n // self.k


@dataclass(frozen=True, slots=True, eq=False)
class BlockDecomposition:
    """The diagonal k-by-k blocks B_1 ... B_{n/k} of an n-by-n matrix."""

    pair: DivisorPair
    blocks: Tuple[Matrix, ...]

    def __post_init__(self) -> None:
        if len(self.blocks) != self.pair.copies:
            raise DimensionError(
                f"expected {self.pair.copies} blocks for {self.pair}, got {len(self.blocks)}"
            )
        for block in self.blocks:
            if block.shape != (self.pair.k, self.pair.k):
                raise DimensionError(f"block has shape {block.shape}, expected k={self.pair.k}")

    def mean(self) -> Matrix:
        return sum(self.blocks[1:], self.blocks[0].copy()) * (self.pair.k / self.pair.n)


class LipVariant(str, Enum):
    TRACE = "1"
    DIVISOR = "k"


@dataclass(frozen=True, slots=True)
class LipSpec:
    """Selects L_{n,1} (TRACE) or L_{n,k} (DIVISOR) with quasi-Leibniz constants (C, D)."""

    n: int
    variant: LipVariant = LipVariant.TRACE
    k: Optional[int] = None
    leibniz_C: float = 2.0
    leibniz_D: float = 0.0

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError(f"Lip-norms are defined for n >= 2 (n={self.n})")
        if (self.leibniz_C, self.leibniz_D) != (2.0, 0.0):
            raise DomainError("quasi-Leibniz constants are fixed at (C, D) = (2, 0)")
        if self.variant is LipVariant.DIVISOR:
            if self.k is None:
                raise DomainError("the divisor Lip-norm needs k")
            DivisorPair(self.k, self.n)
            if not 1 < self.k < self.n:
                raise DomainError(f"the divisor Lip-norm needs 1 < k < n (k={self.k}, n={self.n})")
        elif self.k is not None:
            raise DomainError("the trace Lip-norm takes no k")

    @classmethod
    def trace(cls, n: int) -> "LipSpec":
        return cls(n=n, variant=LipVariant.TRACE)

    @classmethod
    def divisor(cls, n: int, k: int) -> "LipSpec":
        return cls(n=n, variant=LipVariant.DIVISOR, k=k)

    @property
    def label(self) -> str:
        if self.variant is LipVariant.TRACE:
            return f"L[n={self.n},1]"
        return f"L[n={self.n},k={self.k}]"


@dataclass(frozen=True, slots=True, eq=False)
class DensityState:
    """A state phi(a) = Tr(rho a) given by a PSD, trace-one Hermitian rho."""

    rho: HermitianMatrix

    @classmethod
    def from_array(cls, value: Any, tol: float = DENSITY_TOL) -> "DensityState":
        from .linalg.jacobi import eigh

        rho = HermitianMatrix.from_array(value)
        trace = float(np.real(np.trace(rho.data)))
        if abs(trace - 1.0) > tol:
            raise DomainError(f"density matrix must have trace 1 (trace={trace:.12g})")
        smallest = float(eigh(rho).eigenvalues[0])
        if smallest < -tol:
            raise DomainError(
                f"density matrix must be positive semidefinite (min eigenvalue={smallest:.3e})"
            )
        return cls(rho=rho)

    @classmethod
    def pure_state(cls, n: int, index: int) -> "DensityState":
        """The vector state at basis position ``index`` (1-based)."""
        if not 1 <= index <= n:
            raise DomainError(f"index must lie in 1..{n} (index={index})")
        values = np.zeros(n)
        values[index - 1] = 1.0
        return cls(rho=HermitianMatrix.diagonal(values))

    @classmethod
    def maximally_mixed(cls, n: int) -> "DensityState":
        return cls(rho=HermitianMatrix.identity(n) * (1.0 / n))

    @property
    def n(self) -> int:
        return self.rho.n


@dataclass(slots=True)
class WitnessReport:
    """Both Lip-norms evaluated on the witness diag(k, 0, ..., 0)."""

    n: int
    k: int
    lip1_value: float
    lipk_value: float
    gap: float
    closed_form_lip1: Fraction
    closed_form_lipk: Fraction
    exact_gap: Fraction
    statement: str = ""

    @property
    def lip1_error(self) -> float:
        return abs(self.lip1_value - float(self.closed_form_lip1))

    @property
    def lipk_error(self) -> float:
        return abs(self.lipk_value - float(self.closed_form_lipk))

    @property
    def certified(self) -> bool:
        return self.exact_gap > 0 and self.gap > 0


@dataclass(slots=True)
class MKResult:
    """A certified lower bound on the state distance with its feasible certificate."""

    value: float
    certificate: HermitianMatrix
    iterations: int
    converged: bool
    oracle_value: Optional[float] = None
    lip_value: float = 0.0

    @property
    def oracle_gap(self) -> Optional[float]:
        if self.oracle_value is None:
            return None
        return abs(self.oracle_value - self.value)


@dataclass(slots=True)
class CheckResult:
    """Outcome of one numerical check against its tolerance."""

    name: str
    residual: float
    tolerance: float
    passed: bool
    suite: str = ""
    trial: Optional[int] = None
    n: Optional[int] = None
    k: Optional[int] = None

    @classmethod
    def at_most(cls, name: str, residual: float, tolerance: float, **context: Any) -> "CheckResult":
        """A check that passes when ``residual <= tolerance``."""
        residual = float(residual)
        return cls(
            name=name,
            residual=residual,
            tolerance=float(tolerance),
            passed=bool(np.isfinite(residual) and residual <= tolerance),
            **context,
        )

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        where = f"[trial {self.trial}] " if self.trial is not None else ""
        return f"{where}{self.name}: {status} (residual {self.residual:.3e} <= {self.tolerance:.1e})"


@dataclass(slots=True)
class Report:
    """Result of a CLI command: echoed config, checks and a command payload."""

    command: str
    seed: int
    version: str
    config: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    results: Dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1


@dataclass(slots=True)
class ValidationResult:
    """Outcome of validating a run configuration."""

    subject: str
    is_valid: bool
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def summary(self) -> str:
        if self.is_valid and not self.warnings:
            return f"{self.subject}: valid"
        if self.is_valid:
            joined = "; ".join(self.warnings)
            return f"{self.subject}: valid with warnings - {joined}"
        joined = "; ".join(self.errors)
        return f"{self.subject}: invalid - {joined}"


class Command(str, Enum):
    CERTIFY = "certify"
    VERIFY = "verify"
    MK = "mk"
    EMBED = "embed"
    PROJECT = "project"
    LIPNORM = "lipnorm"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Everything a CLI invocation needs, resolved from flags and environment."""

    command: Command
    n: Optional[int] = None
    k: Optional[int] = None
    trials: int = 100
    seed: int = 0
    tol: float = DEFAULT_TOL
    output_format: OutputFormat = OutputFormat.TEXT
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    suite: Optional[str] = None
    variant: LipVariant = LipVariant.TRACE
    all_k: bool = False
    workers: int = 1
    rho_path: Optional[str] = None
    sigma_path: Optional[str] = None
    max_iters: int = 2000
    mk_tol: float = 1e-3

    def echo(self) -> Dict[str, Any]:
        return {
            "command": self.command.value,
            "n": self.n,
            "k": self.k,
            "trials": self.trials,
            "seed": self.seed,
            "tol": self.tol,
            "suite": self.suite,
            "variant": self.variant.value,
            "all_k": self.all_k,
        }


__all__ = [
    "BlockDecomposition",
    "CheckResult",
    "Command",
    "DEFAULT_TOL",
    "DENSITY_TOL",
    "DensityState",
    "DivisorPair",
    "HERMITIAN_TOL",
    "HermitianMatrix",
    "LipSpec",
    "LipVariant",
    "MKResult",
    "Matrix",
    "OutputFormat",
    "Report",
    "RunConfig",
    "Spectrum",
    "UNITARY_TOL",
    "ValidationResult",
    "WitnessReport",
    "as_matrix",
]
