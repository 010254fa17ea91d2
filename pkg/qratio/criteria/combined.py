from __future__ import annotations

__all__ = ["run_all_criteria", "combine_bounds", "find_contradictions", "find_refuted_claims"]

import logging
import typing as tp

from qratio.config import DEFAULT_PRECISION_BITS
from qratio.poly import Poly, is_all_positive

from .alternation import cor_anya_lower_bound, prop_anya_certificate
from .certificates import BoundCertificate
from .classical import hutchinson_test, newton_necessary
from .sums import corollary1_test, corollary2_sweep, theorem1_sum_test
from .trigonometric import theorem_A_test, theorem_B_test, theorem_D_test, theorem_E_test, theorem_F_test

_LOGGER = logging.getLogger("qratio")


def run_all_criteria(p: Poly, precision_bits: int = DEFAULT_PRECISION_BITS) -> list[BoundCertificate]:
    """Every criterion that takes a bare polynomial. Not-applicable certificates are included, with their reasons."""
    certificates = [
        hutchinson_test(p),
        newton_necessary(p),
        theorem_A_test(p, precision_bits),
        theorem_B_test(p, precision_bits),
        theorem_D_test(p, precision_bits),
        theorem_E_test(p, precision_bits),
        theorem_F_test(p, precision_bits),
        theorem1_sum_test(p),
        corollary1_test(p),
    ]
    if p.degree >= 4 and is_all_positive(p):
        certificates += corollary2_sweep(p)
    certificates.append(prop_anya_certificate(p, precision_bits))
    certificates.append(cor_anya_lower_bound(p))
    _LOGGER.debug(
        f"Ran {len(certificates)} criteria on degree {p.degree}; {sum(c.fired for c in certificates)} fired."
    )
    return certificates


def combine_bounds(certificates: tp.Iterable[BoundCertificate], degree: int) -> tuple[int, int]:
    """Intersection of the root count ranges of all certificates. Only fired, certifying ones narrow it."""
    lower, upper = 0, degree
    for certificate in certificates:
        lo, hi = certificate.root_count_interval()
        lower, upper = max(lower, lo), min(upper, hi)
    return lower, upper


def find_contradictions(certificates: tp.Iterable[BoundCertificate], actual_roots: int) -> list[BoundCertificate]:
    return [c for c in certificates if not c.consistent_with(actual_roots)]


def find_refuted_claims(certificates: tp.Iterable[BoundCertificate], actual_roots: int) -> list[BoundCertificate]:
    """Non-certifying claims the oracle count disagrees with. These are expected, not soundness failures."""
    return [c for c in certificates if c.refuted_by(actual_roots)]
