"""Distance between states induced by a Lip-norm.

mk_L(phi, psi) = sup{|phi(a) - psi(a)| : a self-adjoint, L(a) <= 1}. The
objective Tr((rho - sigma) a) is linear with constant gradient. For the trace
Lip-norm the solver runs projected ascent over the traceless unit ball, whose
projection is exact; for divisor Lip-norms it maximizes the functional directly
with the lifted splitting of :mod:`qmetric.distance.projection`. Either way it
reports the best feasible certificate it has seen. Only a lower bound is ever
claimed; diagonal instances are checked against the exact LP oracle.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from ..errors import DimensionError, DomainError
from ..lipnorms.seminorms import lip_eval
from ..models import DensityState, HermitianMatrix, LipSpec, LipVariant, MKResult
from .oracle import mk_diagonal_oracle
from .projection import project_lip_ball, solve_lifted

logger = logging.getLogger(__name__)

STEP_RULES = ("diminishing", "constant")


@dataclass(frozen=True, slots=True)
class MKOptions:
    """Solver knobs.

    ``step_rule`` and ``step_scale`` (default 100 * n) drive the trace ascent;
    ``penalty`` is the ADMM weight of the divisor splitting.
    """

    max_iters: int = 2000
    step_rule: str = "diminishing"
    tol: float = 1e-3
    step_scale: Optional[float] = None
    penalty: float = 1.0
    stationarity_tol: float = 1e-7

    def __post_init__(self) -> None:
        if self.step_rule not in STEP_RULES:
            raise DomainError(f"step_rule must be one of {STEP_RULES}, got '{self.step_rule}'")
        if self.max_iters < 1:
            raise DomainError(f"max_iters must be positive (max_iters={self.max_iters})")
        if self.tol <= 0:
            raise DomainError(f"tol must be positive (tol={self.tol})")
        if self.penalty <= 0:
            raise DomainError(f"penalty must be positive (penalty={self.penalty})")

    def step(self, iteration: int, n: int) -> float:
        scale = self.step_scale if self.step_scale is not None else 100.0 * n
        if self.step_rule == "constant":
            return scale
        return scale / (iteration + 1)


def pairing(rho: DensityState, a: Any) -> float:
    """phi(a) = Tr(rho a) for self-adjoint a."""
    h = HermitianMatrix.from_array(a)
    if h.n != rho.n:
        raise DimensionError(f"state is {rho.n}x{rho.n} but a is {h.n}x{h.n}")
    return float(np.real(np.vdot(rho.rho.data, h.data)))


def _feasible(spec: LipSpec, x: np.ndarray) -> tuple[HermitianMatrix, float]:
    candidate = HermitianMatrix.from_array(x)
    lip = lip_eval(spec, candidate)
    if lip > 1.0:
        candidate = candidate * (1.0 / lip)
        lip = lip_eval(spec, candidate)
    return candidate, lip


@dataclass(slots=True, eq=False)
class _Best:
    certificate: HermitianMatrix
    value: float = 0.0
    lip: float = 0.0

    def offer(self, certificate: HermitianMatrix, value: float, lip: float) -> None:
        if value > self.value:
            self.certificate, self.value, self.lip = certificate, value, lip


def _trace_ascent(
    spec: LipSpec,
    rho: DensityState,
    sigma: DensityState,
    gradient: np.ndarray,
    opts: MKOptions,
    best: _Best,
) -> tuple[int, bool]:
    """Projected ascent; the traceless ball projection is exact, so small movement means optimal."""
    x = np.zeros((spec.n, spec.n), dtype=np.complex128)
    for iteration in range(opts.max_iters):
        eta = opts.step(iteration, spec.n)
        x_next = project_lip_ball(spec, x + eta * gradient).data
        certificate, lip = _feasible(spec, x_next)
        best.offer(certificate, pairing(rho, certificate) - pairing(sigma, certificate), lip)
        movement = float(np.linalg.norm(x_next - x)) / eta
        x = x_next
        if movement <= opts.stationarity_tol:
            return iteration + 1, True
    return opts.max_iters, False


def _divisor_split(
    spec: LipSpec,
    rho: DensityState,
    sigma: DensityState,
    gradient: np.ndarray,
    opts: MKOptions,
    best: _Best,
) -> tuple[int, bool]:
    """Linear maximization over the lifted divisor ball; stationary once both residuals vanish."""
    solution = solve_lifted(
        spec,
        np.zeros_like(gradient),
        gradient,
        weight=0.0,
        penalty=opts.penalty,
        max_iters=opts.max_iters,
        tol=opts.stationarity_tol,
    )
    certificate, lip = _feasible(spec, solution.matrix)
    best.offer(certificate, pairing(rho, certificate) - pairing(sigma, certificate), lip)
    return solution.iterations, solution.converged


def mk_distance(
    spec: LipSpec,
    rho: DensityState,
    sigma: DensityState,
    opts: Optional[MKOptions] = None,
) -> MKResult:
    """Certified lower bound on mk_L(rho, sigma) with a feasible certificate.

    Non-convergence is reported through ``converged=False``; it never raises.
    """
    opts = opts or MKOptions()
    for state in (rho, sigma):
        if state.n != spec.n:
            raise DimensionError(
                f"{spec.label} needs {spec.n}x{spec.n} states, got {state.n}x{state.n}"
            )

    delta = HermitianMatrix.from_array(rho.rho.data - sigma.rho.data)
    oracle_value = None
    if delta.is_diagonal:
        # admitted states carry trace error up to DENSITY_TOL; the oracle wants an exact zero sum
        diagonal = delta.real_diagonal()
        oracle_value = mk_diagonal_oracle(spec, diagonal - diagonal.mean())

    best = _Best(HermitianMatrix.from_array(np.zeros((spec.n, spec.n))))
    scale = float(np.linalg.norm(delta.data))
    if scale == 0.0:
        return MKResult(
            value=0.0,
            certificate=best.certificate,
            iterations=0,
            converged=True,
            oracle_value=oracle_value,
        )

    gradient = delta.data / scale
    if spec.variant is LipVariant.TRACE:
        iterations, stationary = _trace_ascent(spec, rho, sigma, gradient, opts, best)
    else:
        iterations, stationary = _divisor_split(spec, rho, sigma, gradient, opts, best)

    if oracle_value is None:
        converged = stationary
    else:
        converged = abs(best.value - oracle_value) <= opts.tol
    logger.debug(
        "mk solver finished",
        extra={
            "spec": spec.label,
            "value": best.value,
            "iterations": iterations,
            "stationary": stationary,
            "oracle": oracle_value,
        },
    )
    return MKResult(
        value=best.value,
        certificate=best.certificate,
        iterations=iterations,
        converged=converged,
        oracle_value=oracle_value,
        lip_value=best.lip,
    )


__all__ = ["MKOptions", "STEP_RULES", "mk_distance", "pairing"]
