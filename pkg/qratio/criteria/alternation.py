"""Sign-alternation points of polynomials whose q-sequence never drops below 1.

Where `q_j >= 4`, `(-1)^j P` is non-negative at `x_j = -sqrt(a_{j-1}/a_{j+1})`, a point inside
`[-a_j/a_{j+1}, -a_{j-1}/a_j]`. Counting sign changes along these points bounds the real root count from below.
"""
from __future__ import annotations

__all__ = [
    "AnyaPoint",
    "prop_anya_points",
    "prop_anya_certificate",
    "cor_anya_lower_bound",
    "sqrt_enclosure",
    "sign_at_negative_sqrt",
]

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from qratio.config import DEFAULT_PRECISION_BITS
from qratio.enums import Criterion, Direction
from qratio.exceptions import NotApplicableError
from qratio.oracle import sign, sign_changes
from qratio.poly import Poly, is_all_positive, q_sequence
from qratio.utilities import fraction_str

from .certificates import BoundCertificate, Witness
from .classical import HUTCHINSON_THRESHOLD


@dataclass(frozen=True, slots=True)
class AnyaPoint:
    index: int
    interval_lo: Fraction  # -a_j / a_{j+1}
    interval_hi: Fraction  # -a_{j-1} / a_j
    witness_square: Fraction  # x_j^2 = a_{j-1} / a_{j+1}
    witness_lo: Fraction
    witness_hi: Fraction
    expected_sign: int  # (-1)^j
    value_sign: int  # exact sign of P(x_j)

    @property
    def holds(self) -> bool:
        return self.expected_sign * self.value_sign >= 0

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "interval": [fraction_str(self.interval_lo), fraction_str(self.interval_hi)],
            "witness_square": fraction_str(self.witness_square),
            "witness_enclosure": [fraction_str(self.witness_lo), fraction_str(self.witness_hi)],
            "expected_sign": self.expected_sign,
            "value_sign": self.value_sign,
            "holds": self.holds,
        }


def sqrt_enclosure(s: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational `lo <= sqrt(s) <= hi` with `hi - lo <= 2^-bits / denominator(s)`; `lo == hi` for perfect squares."""
    if s < 0:
        raise ValueError("Square root of a negative rational.")
    scaled = s.numerator * s.denominator << (2 * bits)
    root = isqrt(scaled)
    scale = s.denominator << bits
    if root * root == scaled:
        return Fraction(root, scale), Fraction(root, scale)
    return Fraction(root, scale), Fraction(root + 1, scale)


def sign_at_negative_sqrt(p: Poly, s: Fraction) -> int:
    """Exact sign of `p(-sqrt(s))` for rational `s > 0`.

    Reducing `p` modulo `x^2 - s` leaves `u + v x`, so the value is `u - v sqrt(s)`. Equal signs decide directly;
    opposite signs are decided by comparing `u^2` with `v^2 s`.
    """
    u = sum((c * s ** (k // 2) for k, c in enumerate(p.coeffs) if k % 2 == 0), Fraction(0))
    v = sum((c * s ** (k // 2) for k, c in enumerate(p.coeffs) if k % 2 == 1), Fraction(0))
    w = -v  # value = u + w * sqrt(s)
    su, sw = sign(u), sign(w)
    if su >= 0 and sw >= 0:
        return 1 if (su or sw) else 0
    if su <= 0 and sw <= 0:
        return -1
    return su * sign(u * u - w * w * s)


def _check_hypothesis(p: Poly) -> str:
    if p.degree < 2:
        return f"degree {p.degree} < 2"
    if not is_all_positive(p):
        return "coefficients are not all positive"
    q = q_sequence(p)
    below_one = [k for k in range(1, p.degree) if q[k] < 1]
    if below_one:
        return f"q_k < 1 at indices {below_one}"
    return ""


def prop_anya_points(p: Poly, precision_bits: int = DEFAULT_PRECISION_BITS) -> list[AnyaPoint]:
    if reason := _check_hypothesis(p):
        raise NotApplicableError(reason)
    a = p.coeffs
    q = q_sequence(p)
    points = []
    for j in range(1, p.degree):
        if q[j] < HUTCHINSON_THRESHOLD:
            continue
        s = a[j - 1] / a[j + 1]
        root_lo, root_hi = sqrt_enclosure(s, precision_bits)
        points.append(
            AnyaPoint(
                index=j,
                interval_lo=-a[j] / a[j + 1],
                interval_hi=-a[j - 1] / a[j],
                witness_square=s,
                witness_lo=-root_hi,
                witness_hi=-root_lo,
                expected_sign=(-1) ** j,
                value_sign=sign_at_negative_sqrt(p, s),
            )
        )
    return points


def cor_anya_lower_bound(p: Poly) -> BoundCertificate:
    """At least `nu(1, (-1)^{j_1}, ..., (-1)^{j_k}, (-1)^n)` real roots, over the indices `j_s` with `q_{j_s} >= 4`."""
    n = p.degree
    if reason := _check_hypothesis(p):
        return BoundCertificate.not_applicable(Criterion.CorAnya, n, reason)
    q = q_sequence(p)
    indices = [j for j in range(1, n) if q[j] >= HUTCHINSON_THRESHOLD]
    signs = [1] + [(-1) ** j for j in indices] + [(-1) ** n]
    return BoundCertificate(
        Criterion.CorAnya,
        n,
        True,
        fired=True,
        direction=Direction.LowerBound,
        bound=sign_changes(signs),
        witnesses=tuple(Witness(f"q_{j}", j, q[j], ">=", HUTCHINSON_THRESHOLD) for j in indices),
    )


def prop_anya_certificate(p: Poly, precision_bits: int = DEFAULT_PRECISION_BITS) -> BoundCertificate:
    """The alternation points packed as a certificate: one witness `(-1)^j sign P(x_j) >= 0` per point.

    It carries no bound of its own (`cor_anya_lower_bound` turns the points into one).
    """
    n = p.degree
    if reason := _check_hypothesis(p):
        return BoundCertificate.not_applicable(Criterion.PropAnya, n, reason)
    points = prop_anya_points(p, precision_bits)
    witnesses = tuple(
        Witness(
            f"(-1)^{point.index} sign P(x_{point.index})",
            point.index,
            Fraction(point.expected_sign * point.value_sign),
            ">=" if point.holds else "<",
            Fraction(0),
        )
        for point in points
    )
    return BoundCertificate(
        Criterion.PropAnya, n, True, fired=bool(points) and all(point.holds for point in points), witnesses=witnesses
    )
