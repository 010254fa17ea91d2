"""Descartes-type root count predictions and their comparison with the Sturm oracle.

For Conjectures 2 and 3 an index `k` is kept when its coefficient combination clears zero (`c~_k > 0` or `c_k >= 0`,
with `a_{-1} = a_{n+1} = 0`). The endpoints `0` and `n` are always kept, and the prediction `v(P)` is the number of
parity changes along the kept indices.
"""
from __future__ import annotations

__all__ = [
    "ConjectureReport",
    "parity_changes",
    "conj2_coefficients",
    "conj3_coefficients",
    "conj1_bound",
    "conj2_bound",
    "conj3_bound",
    "evaluate_conjecture",
]

import operator
import typing as tp
from dataclasses import dataclass, field
from fractions import Fraction

from qratio.enums import Conjecture
from qratio.exceptions import NotApplicableError
from qratio.oracle import count_real_roots
from qratio.poly import Poly, is_all_positive

from .tropical import tropical_corner_count, upper_hull_indices, weighted_points


@dataclass(frozen=True, slots=True)
class ConjectureReport:
    conjecture: Conjecture
    degree: int
    predicted_bound: int
    actual_roots: int
    violated: bool
    indices: tuple[int, ...] = ()
    parities: tuple[int, ...] = ()
    strict: bool | None = None
    label: str = ""
    extra: dict[str, tp.Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "conjecture": str(self.conjecture),
            "label": self.label,
            "degree": self.degree,
            "predicted_bound": self.predicted_bound,
            "actual_roots": self.actual_roots,
            "violated": self.violated,
            "indices": list(self.indices),
            "parities": list(self.parities),
            "strict": self.strict,
            **self.extra,
        }


def parity_changes(indices: tp.Sequence[int]) -> int:
    return sum((a - b) % 2 for a, b in zip(indices, indices[1:]))


def _padded(p: Poly) -> list[Fraction]:
    return [Fraction(0)] + list(p.coeffs) + [Fraction(0)]


def conj2_coefficients(p: Poly) -> list[Fraction]:
    """`c~_k = (k+1) a_k^2 - k a_{k-1} a_{k+1}` for `k = 0..n`."""
    a = _padded(p)
    return [(k + 1) * a[k + 1] ** 2 - k * a[k] * a[k + 2] for k in range(p.degree + 1)]


def conj3_coefficients(p: Poly) -> list[Fraction]:
    """`c_k = a_k^2 - a_{k-1} a_{k+1}` for `k = 0..n`."""
    a = _padded(p)
    return [a[k + 1] ** 2 - a[k] * a[k + 2] for k in range(p.degree + 1)]


def _require_positive(p: Poly, what: str):
    if p.degree < 1 or not is_all_positive(p):
        raise NotApplicableError(f"{what} needs degree >= 1 and all coefficients positive.")


def _actual(p: Poly, actual_roots: int | None) -> int:
    if actual_roots is not None:
        return actual_roots
    return count_real_roots(p, isolate=False).total_with_multiplicity


def _parity_report(
    p: Poly,
    conjecture: Conjecture,
    values: list[Fraction],
    strict: bool,
    actual_roots: int | None,
    label: str,
) -> ConjectureReport:
    keep = operator.gt if strict else operator.ge
    indices = tuple(k for k, value in enumerate(values) if keep(value, 0))
    predicted = parity_changes(indices)
    actual = _actual(p, actual_roots)
    return ConjectureReport(
        conjecture,
        p.degree,
        predicted,
        actual,
        violated=actual > predicted,
        indices=indices,
        parities=tuple(k % 2 for k in indices),
        strict=strict,
        label=label,
    )


def conj1_bound(p: Poly, actual_roots: int | None = None, label: str = "") -> ConjectureReport:
    """Tropical corner count as the predicted bound. Reported only; nothing here claims a violation is impossible."""
    _require_positive(p, "Conjecture 1")
    corners = tropical_corner_count(p)
    actual = _actual(p, actual_roots)
    hull = tuple(upper_hull_indices(weighted_points(p)))
    return ConjectureReport(
        Conjecture.TropicalC1,
        p.degree,
        corners,
        actual,
        violated=actual > corners,
        indices=hull,
        parities=tuple(k % 2 for k in hull),
        label=label,
    )


def conj2_bound(
    p: Poly, strict: bool = True, actual_roots: int | None = None, label: str = ""
) -> ConjectureReport:
    _require_positive(p, "Conjecture 2")
    return _parity_report(p, Conjecture.NewtonWeightedC2, conj2_coefficients(p), strict, actual_roots, label)


def conj3_bound(
    p: Poly, strict: bool = False, actual_roots: int | None = None, label: str = ""
) -> ConjectureReport:
    _require_positive(p, "Conjecture 3")
    return _parity_report(p, Conjecture.LogConcaveC3, conj3_coefficients(p), strict, actual_roots, label)


def evaluate_conjecture(
    conjecture: Conjecture, p: Poly, actual_roots: int | None = None, label: str = ""
) -> ConjectureReport:
    match conjecture:
        case Conjecture.TropicalC1:
            return conj1_bound(p, actual_roots=actual_roots, label=label)
        case Conjecture.NewtonWeightedC2:
            return conj2_bound(p, actual_roots=actual_roots, label=label)
        case Conjecture.LogConcaveC3:
            return conj3_bound(p, actual_roots=actual_roots, label=label)
    raise ValueError(f"Unknown conjecture: {conjecture}")
