"""Certificate that (M_n(C), L_{n,1}) and (M_n(C), L_{n,k}) are not quantum isometric."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any

from ..errors import DomainError
from ..linalg.core import conjugate_by_unitary
from ..models import LipSpec, WitnessReport
from .seminorms import lip_eval, witness

logger = logging.getLogger(__name__)

CLOSED_FORM_TOL = 1e-12

INVARIANCE_STATEMENT = (
    "L_{n,1} is invariant under every unitary conjugation a -> UaU*, and every "
    "*-automorphism of M_n(C) is such a conjugation, so no *-isomorphism can carry "
    "L_{n,k} to L_{n,1}; the two spaces are not quantum isometric and their "
    "propinquity is positive."
)


def closed_form_lip1(n: int, k: int) -> Fraction:
    """k(n-1)/n, the trace Lip-norm of the witness."""
    return Fraction(k * (n - 1), n)


def closed_form_lipk(n: int, k: int) -> Fraction:
    """k^2(n-k)/n, the divisor Lip-norm of the witness."""
    return Fraction(k * k * (n - k), n)


def exact_gap(n: int, k: int) -> Fraction:
    """(k^2(n-k) - k(n-1)) / n in exact rational arithmetic."""
    LipSpec.divisor(n, k)
    return closed_form_lipk(n, k) - closed_form_lip1(n, k)


def _gap_chain_holds(n: int, k: int) -> bool:
    # k <= n/2 gives n - k >= n/2, and k >= 2 then gives k(n - k) >= n > n - 1
    return k * (n - k) >= n > n - 1 and k * (k * (n - k) - (n - 1)) > 0


def certify_non_isometry(n: int, k: int) -> WitnessReport:
    """Evaluate both Lip-norms on the witness and certify the gap between them."""
    spec_1 = LipSpec.trace(n)
    spec_k = LipSpec.divisor(n, k)
    w = witness(n, k)
    lip1 = lip_eval(spec_1, w)
    lipk = lip_eval(spec_k, w)
    gap = exact_gap(n, k)
    if not _gap_chain_holds(n, k):
        raise DomainError(f"gap chain k(n-k) >= n > n-1 fails for (n={n}, k={k})")

    report = WitnessReport(
        n=n,
        k=k,
        lip1_value=lip1,
        lipk_value=lipk,
        gap=lipk - lip1,
        closed_form_lip1=closed_form_lip1(n, k),
        closed_form_lipk=closed_form_lipk(n, k),
        exact_gap=gap,
        statement=INVARIANCE_STATEMENT,
    )
    if report.lip1_error > CLOSED_FORM_TOL or report.lipk_error > CLOSED_FORM_TOL:
        logger.warning(
            "witness values drift from closed forms",
            extra={"n": n, "k": k, "lip1_error": report.lip1_error, "lipk_error": report.lipk_error},
        )
    return report


def check_intertwining(n: int, k: int, u: Any) -> float:
    """|L_{n,1}(U w U*) - L_{n,k}(w)| - gap for the witness w; never below -1e-6."""
    w = witness(n, k)
    rotated = conjugate_by_unitary(u, w)
    distance = abs(lip_eval(LipSpec.trace(n), rotated) - lip_eval(LipSpec.divisor(n, k), w))
    return distance - float(exact_gap(n, k))


__all__ = [
    "CLOSED_FORM_TOL",
    "INVARIANCE_STATEMENT",
    "certify_non_isometry",
    "check_intertwining",
    "closed_form_lip1",
    "closed_form_lipk",
    "exact_gap",
]
