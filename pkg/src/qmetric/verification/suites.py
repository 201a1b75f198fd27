"""Per-trial invariant checks behind ``qmetric verify --suite``.

Each suite takes a :class:`TrialContext` and returns the residuals of one
random draw. Draws are seeded from the per-trial seed only, so a trial gives the
same residuals whether it runs alone, serially or on a worker thread.
"""
from __future__ import annotations

from typing import Dict, List, Optional

import numpy as np

from ..linalg.core import (
    conjugate_by_unitary,
    operator_norm,
    power_iteration_norm,
    random_hermitian,
    random_matrix,
    random_unitary,
)
from ..linalg.jacobi import eigh
from ..lipnorms.certificate import check_intertwining, closed_form_lip1
from ..lipnorms.seminorms import (
    check_kernel,
    check_quasi_leibniz,
    check_seminorm,
    check_unitary_invariance,
    lip_eval,
    witness,
)
from ..maps.embedding import divisor_pairs, embed, embed_kron, normalized_trace
from ..maps.expectation import (
    check_expectation_axioms,
    cond_expectation,
    cond_expectation_basis,
    cond_expectation_blockmean,
)
from ..models import CheckResult, DivisorPair, HermitianMatrix, LipSpec
from ..orchestration.orchestrator import TrialCheck, TrialContext

AXIOM_TOLERANCES: Dict[str, float] = {
    "positivity": 1e-9,
    "contractivity": 1e-9,
    "module": 1e-11,
    "fixed_point": 1e-12,
    "idempotence": 1e-12,
    "trace": 1e-12,
    "orthogonality": 1e-12,
    "tower": 1e-12,
}


def _seeds(context: TrialContext, count: int) -> List[int]:
    rng = np.random.default_rng(context.seed)
    return [int(value) for value in rng.integers(0, 2**63 - 1, size=count)]


def _check(context: TrialContext, name: str, residual: float, tol: float, k: Optional[int] = None) -> CheckResult:
    return CheckResult.at_most(
        f"{context.suite}.{name}",
        residual,
        tol,
        suite=context.suite,
        trial=context.trial,
        n=context.n,
        k=context.k if k is None else k,
    )


def _pairs(context: TrialContext) -> List[DivisorPair]:
    if context.k is not None:
        return [DivisorPair(context.k, context.n)]
    return divisor_pairs(context.n)


def _specs(context: TrialContext) -> List[LipSpec]:
    specs = [LipSpec.trace(context.n)]
    if context.k is not None and 1 < context.k < context.n:
        specs.append(LipSpec.divisor(context.n, context.k))
    return specs


def cstar_suite(context: TrialContext) -> List[CheckResult]:
    seed_a, seed_b, seed_u = _seeds(context, 3)
    n = context.n
    a = random_matrix(n, seed_a)
    b = random_matrix(n, seed_b)
    norm_a = operator_norm(a)
    norm_b = operator_norm(b)
    trace_scale = max(1.0, float(np.linalg.norm(a)) * float(np.linalg.norm(b)))
    rotated = conjugate_by_unitary(random_unitary(n, seed_u), a)
    return [
        _check(
            context,
            "cstar_identity",
            abs(operator_norm(a.conj().T @ a) - norm_a**2) / (1.0 + norm_a**2),
            1e-8,
        ),
        _check(context, "submultiplicativity", max(0.0, operator_norm(a @ b) - norm_a * norm_b), 1e-9),
        _check(
            context,
            "adjoint_product",
            float(np.max(np.abs((a @ b).conj().T - b.conj().T @ a.conj().T))) / trace_scale,
            1e-12,
        ),
        _check(
            context,
            "trace_cyclicity",
            abs(np.trace(a @ b) - np.trace(b @ a)) / trace_scale,
            1e-12,
        ),
        _check(context, "unitary_norm", abs(operator_norm(rotated) - norm_a), context.tol),
    ]


def spectral_suite(context: TrialContext) -> List[CheckResult]:
    seed_h, seed_a, seed_power = _seeds(context, 3)
    n = context.n
    h = random_hermitian(n, seed_h)
    spectrum = eigh(h)
    scale = max(1.0, operator_norm(h))
    v = spectrum.eigenvectors
    a = random_matrix(n, seed_a)
    norm_a = operator_norm(a)
    return [
        _check(context, "reconstruction", operator_norm(h.data - spectrum.reconstruct()) / scale, 1e-10),
        _check(context, "orthonormality", float(np.max(np.abs(v.conj().T @ v - np.eye(n)))), 1e-10),
        _check(
            context,
            "power_iteration",
            abs(norm_a - power_iteration_norm(a, seed=seed_power)) / max(1.0, norm_a),
            1e-7,
        ),
    ]


def embed_suite(context: TrialContext) -> List[CheckResult]:
    results: List[CheckResult] = []
    for pair in _pairs(context):
        seed_a, seed_b = _seeds(context, 2)
        a = random_matrix(pair.k, seed_a)
        b = random_matrix(pair.k, seed_b)
        image = embed(pair, a)
        results.extend(
            [
                _check(context, "isometry", abs(operator_norm(image) - operator_norm(a)), 1e-10, pair.k),
                _check(
                    context,
                    "multiplicative",
                    float(np.max(np.abs(embed(pair, a @ b) - image @ embed(pair, b)))),
                    1e-12,
                    pair.k,
                ),
                _check(
                    context,
                    "adjoint",
                    float(np.max(np.abs(embed(pair, a.conj().T) - image.conj().T))),
                    1e-12,
                    pair.k,
                ),
                _check(
                    context,
                    "block_assembly",
                    float(np.max(np.abs(embed_kron(pair, a) - image))),
                    1e-12,
                    pair.k,
                ),
            ]
        )
    return results


def trace_suite(context: TrialContext) -> List[CheckResult]:
    results: List[CheckResult] = []
    for pair in _pairs(context):
        (seed_a,) = _seeds(context, 1)
        a = random_matrix(pair.k, seed_a)
        residual = abs(normalized_trace(embed(pair, a)) - normalized_trace(a))
        results.append(_check(context, "trace_compatibility", residual, 1e-12, pair.k))
    return results


def projection_suite(context: TrialContext) -> List[CheckResult]:
    results: List[CheckResult] = []
    for pair in _pairs(context):
        seed_a, seed_b, seed_c = _seeds(context, 3)
        a = random_matrix(pair.n, seed_a)
        coordinate = cond_expectation(pair, a)
        agreement = max(
            float(np.max(np.abs(cond_expectation_blockmean(pair, a) - coordinate))),
            float(np.max(np.abs(cond_expectation_basis(pair, a) - coordinate))),
        )
        results.append(_check(context, "three_forms", agreement, 1e-13, pair.k))
        b_small = random_matrix(pair.k, seed_b)
        c_small = random_matrix(pair.k, seed_c)
        scale = max(1.0, operator_norm(a) * operator_norm(b_small) * operator_norm(c_small))
        for axiom, residual in check_expectation_axioms(pair, a, b_small, c_small).items():
            tolerance = AXIOM_TOLERANCES[axiom]
            if axiom == "module":
                residual /= scale
            results.append(_check(context, axiom, residual, tolerance, pair.k))
    return results


def leibniz_suite(context: TrialContext) -> List[CheckResult]:
    seed_a, seed_b, seed_r = _seeds(context, 3)
    a = random_hermitian(context.n, seed_a)
    b = random_hermitian(context.n, seed_b)
    r = float(np.random.default_rng(seed_r).uniform(-5.0, 5.0))
    scale = (1.0 + operator_norm(a)) * (1.0 + operator_norm(b))
    results: List[CheckResult] = []
    for spec in _specs(context):
        k = spec.k if spec.k is not None else 1
        margin = check_quasi_leibniz(spec, a, b)
        results.append(_check(context, f"quasi_leibniz[{spec.label}]", max(0.0, -margin) / scale, 1e-9, k))
        for name, residual in check_seminorm(spec, a, b, r).items():
            results.append(_check(context, f"{name}[{spec.label}]", residual, context.tol, k))
    return results


def unitary_suite(context: TrialContext) -> List[CheckResult]:
    seed_u, seed_a = _seeds(context, 2)
    u = random_unitary(context.n, seed_u)
    a = random_hermitian(context.n, seed_a)
    residual = check_unitary_invariance(context.n, u, a) / (1.0 + operator_norm(a))
    return [_check(context, "unitary_invariance", residual, context.tol, 1)]


def kernel_suite(context: TrialContext) -> List[CheckResult]:
    seed_a, seed_t = _seeds(context, 2)
    a = random_hermitian(context.n, seed_a)
    t = float(np.random.default_rng(seed_t).uniform(-10.0, 10.0))
    scalar = HermitianMatrix.identity(context.n) * t
    results: List[CheckResult] = []
    for spec in _specs(context):
        k = spec.k if spec.k is not None else 1
        results.append(_check(context, f"scalar_vanishes[{spec.label}]", lip_eval(spec, scalar), 1e-10, k))
        for label, candidate in (("scalar", scalar), ("random", a)):
            agrees = check_kernel(spec, candidate)
            results.append(_check(context, f"kernel_{label}[{spec.label}]", 0.0 if agrees else 1.0, 0.0, k))
    return results


def isometry_suite(context: TrialContext) -> List[CheckResult]:
    n, k = context.n, context.k
    if k is None:
        raise ValueError("the isometry suite needs a proper divisor k")
    (seed_u,) = _seeds(context, 1)
    u = random_unitary(n, seed_u)
    expected = float(closed_form_lip1(n, k))
    rotated = conjugate_by_unitary(u, witness(n, k))
    return [
        _check(
            context,
            "rotated_witness",
            abs(lip_eval(LipSpec.trace(n), rotated) - expected),
            context.tol * max(1.0, expected),
        ),
        _check(context, "intertwining", max(0.0, -check_intertwining(n, k, u)), 1e-6),
    ]


SUITE_CHECKS: Dict[str, TrialCheck] = {
    "cstar": cstar_suite,
    "embed": embed_suite,
    "trace": trace_suite,
    "projection": projection_suite,
    "leibniz": leibniz_suite,
    "unitary": unitary_suite,
    "kernel": kernel_suite,
    "spectral": spectral_suite,
    "isometry": isometry_suite,
}


def suites_for(name: str) -> List[str]:
    """Suite names selected by ``--suite``; ``all`` expands in registry order."""
    if name == "all":
        return list(SUITE_CHECKS)
    if name not in SUITE_CHECKS:
        raise ValueError(f"unknown suite '{name}'; expected one of {', '.join(SUITE_CHECKS)} or all")
    return [name]


__all__ = [
    "AXIOM_TOLERANCES",
    "SUITE_CHECKS",
    "cstar_suite",
    "embed_suite",
    "isometry_suite",
    "kernel_suite",
    "leibniz_suite",
    "projection_suite",
    "spectral_suite",
    "suites_for",
    "trace_suite",
    "unitary_suite",
]
