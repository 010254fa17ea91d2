"""Criteria whose thresholds involve `1/cos^2(pi/(m+2))`.

Every comparison goes through a `CertifiedConstant`: a value below the lower end passes, a value at or above the upper
end fails, and anything in between makes the certificate indeterminate (raise `precision_bits` to resolve it).
"""
from __future__ import annotations

__all__ = [
    "theorem_A_test",
    "theorem_B_test",
    "theorem_D_test",
    "theorem_E_test",
    "theorem_F_test",
    "odd_index_thresholds",
    "even_index_thresholds",
]

from fractions import Fraction

from qratio.config import DEFAULT_PRECISION_BITS
from qratio.enums import Criterion, Direction, PositivityTag
from qratio.poly import Poly, positivity_class, q_sequence

from .certificates import BoundCertificate, CertifiedConstant, Witness
from .constants import certified_inv_cos_sq

_EVEN_OK = (PositivityTag.AllPositive, PositivityTag.EvenPositive)
_ODD_OK = (PositivityTag.AllPositive, PositivityTag.OddPositive)


def odd_index_thresholds(n: int, precision_bits: int) -> list[tuple[int, CertifiedConstant]]:
    """`(2k+1, 1/cos^2(pi/(m+2)))` for the odd indices `1..2m-1` of a degree `2m` polynomial."""
    m = n // 2
    constant = certified_inv_cos_sq(m, precision_bits)
    return [(2 * k + 1, constant) for k in range(m)]


def even_index_thresholds(n: int, precision_bits: int) -> list[tuple[int, CertifiedConstant]]:
    """`(2k, (4k^2-1)/(4k^2) / cos^2(pi/(m+2)))` for `k = 1..m` of a degree `2m+1` polynomial."""
    m = n // 2
    constant = certified_inv_cos_sq(m, precision_bits)
    return [
        (2 * k, constant.scaled(Fraction(4 * k * k - 1, 4 * k * k), f"(4*{k}^2-1)/(4*{k}^2) * {constant.target}"))
        for k in range(1, m + 1)
    ]


def _threshold_certificate(
    p: Poly,
    criterion: Criterion,
    direction: Direction,
    bound: int,
    checks: list[tuple[int, CertifiedConstant]],
) -> BoundCertificate:
    n = p.degree
    q = q_sequence(p)
    passed = []
    blocking = []
    gap = []
    for k, threshold in checks:
        decision = threshold.strictly_above(q[k])
        if decision is True:
            passed.append(Witness(f"q_{k}", k, q[k], "<", threshold.lower))
        elif decision is False:
            blocking.append(Witness(f"q_{k}", k, q[k], ">=", threshold.upper))
        else:
            gap.append(k)

    if blocking:
        return BoundCertificate(criterion, n, True, fired=False, direction=direction, witnesses=tuple(blocking))
    if gap:
        return BoundCertificate(
            criterion,
            n,
            True,
            fired=False,
            direction=direction,
            witnesses=tuple(passed),
            indeterminate=True,
            reason=f"q at indices {gap} lies inside the threshold enclosure; raise precision_bits",
        )
    return BoundCertificate(criterion, n, True, fired=True, direction=direction, bound=bound, witnesses=tuple(passed))


def _even_degree_gate(p: Poly, allowed: tuple[PositivityTag, ...], what: str) -> str:
    if p.degree < 2 or p.degree % 2:
        return f"degree {p.degree} is not an even number >= 2"
    if positivity_class(p) not in allowed:
        return f"{what} coefficients are not all positive"
    return ""


def _odd_degree_gate(p: Poly, allowed: tuple[PositivityTag, ...], what: str) -> str:
    if p.degree < 3 or p.degree % 2 == 0:
        return f"degree {p.degree} is not an odd number >= 3"
    if positivity_class(p) not in allowed:
        return f"{what} coefficients are not all positive"
    return ""


def theorem_A_test(p: Poly, precision_bits: int = DEFAULT_PRECISION_BITS) -> BoundCertificate:
    """Degree `2m`, positive coefficients, every odd-index `q` below `1/cos^2(pi/(m+2))`: no real roots."""
    if reason := _even_degree_gate(p, (PositivityTag.AllPositive,), "all"):
        return BoundCertificate.not_applicable(Criterion.ThmA, p.degree, reason)
    return _threshold_certificate(
        p, Criterion.ThmA, Direction.Positivity, 0, odd_index_thresholds(p.degree, precision_bits)
    )


def theorem_B_test(p: Poly, precision_bits: int = DEFAULT_PRECISION_BITS) -> BoundCertificate:
    """Degree `2m+1`, positive coefficients, `q_{2k}` below the scaled thresholds: exactly one real root."""
    if reason := _odd_degree_gate(p, (PositivityTag.AllPositive,), "all"):
        return BoundCertificate.not_applicable(Criterion.ThmB, p.degree, reason)
    return _threshold_certificate(
        p, Criterion.ThmB, Direction.ExactCount, 1, even_index_thresholds(p.degree, precision_bits)
    )


def theorem_D_test(p: Poly, precision_bits: int = DEFAULT_PRECISION_BITS) -> BoundCertificate:
    """Theorem A with only the even-index coefficients required positive."""
    if reason := _even_degree_gate(p, _EVEN_OK, "even-index"):
        return BoundCertificate.not_applicable(Criterion.ThmD, p.degree, reason)
    return _threshold_certificate(
        p, Criterion.ThmD, Direction.Positivity, 0, odd_index_thresholds(p.degree, precision_bits)
    )


def theorem_E_test(p: Poly, precision_bits: int = DEFAULT_PRECISION_BITS) -> BoundCertificate:
    """Theorem B with only the odd-index coefficients required positive."""
    if reason := _odd_degree_gate(p, _ODD_OK, "odd-index"):
        return BoundCertificate.not_applicable(Criterion.ThmE, p.degree, reason)
    return _threshold_certificate(
        p, Criterion.ThmE, Direction.ExactCount, 1, even_index_thresholds(p.degree, precision_bits)
    )


def theorem_F_test(p: Poly, precision_bits: int = DEFAULT_PRECISION_BITS) -> BoundCertificate:
    """Mirror image of Theorem E: even-index coefficients positive and `q_{2m+1-2k}` below the thresholds.

    Reversal maps `q_{2k}` to `q_{2m+1-2k}` and even-index coefficients to odd-index ones, so this fires on `p`
    exactly when `theorem_E_test` fires on `reverse(p)`.
    """
    if reason := _odd_degree_gate(p, _EVEN_OK, "even-index"):
        return BoundCertificate.not_applicable(Criterion.ThmF, p.degree, reason)
    n = p.degree
    checks = [(n - k, threshold) for k, threshold in even_index_thresholds(n, precision_bits)]
    return _threshold_certificate(p, Criterion.ThmF, Direction.ExactCount, 1, checks)
