from __future__ import annotations

__all__ = ["QSeq", "q_sequence", "coeffs_from_q", "positivity_class", "is_all_positive"]

import typing as tp
from dataclasses import dataclass
from fractions import Fraction

from qratio.enums import PositivityTag
from qratio.exceptions import DegreeTooSmall, InvalidQSequence, NotApplicableError
from qratio.utilities import RationalLike, fraction_str, to_fraction

from .core import Poly


@dataclass(frozen=True, slots=True)
class QSeq:
    """Ratios `q_k = a_k^2 / (a_{k-1} a_{k+1})` for `k = 1..n-1`.

    An index is absent whenever one of its two neighbouring coefficients is zero. Values are signed: sign-mixed inputs
    (allowed by the parity-positivity tests) can give negative `q_k`.
    """

    degree: int
    entries: dict[int, Fraction]

    def __getitem__(self, k: int) -> Fraction:
        try:
            return self.entries[k]
        except KeyError:
            raise KeyError(f"q_{k} is undefined for this polynomial (degree {self.degree}).") from None

    def __contains__(self, k: int) -> bool:
        return k in self.entries

    def get(self, k: int, default=None) -> Fraction | None:
        return self.entries.get(k, default)

    @property
    def is_total(self) -> bool:
        return len(self.entries) == self.degree - 1

    def values(self) -> list[Fraction]:
        """Entries in index order. Only meaningful when `is_total`."""
        if not self.is_total:
            raise NotApplicableError("q-sequence has undefined entries.")
        return [self.entries[k] for k in range(1, self.degree)]

    def to_json(self) -> dict[str, str]:
        return {str(k): fraction_str(v) for k, v in sorted(self.entries.items())}


def q_sequence(p: Poly) -> QSeq:
    if p.degree < 2 or p.is_zero:
        raise DegreeTooSmall(f"q-sequence needs degree >= 2, got degree {p.degree}.")
    a = p.coeffs
    entries = {}
    for k in range(1, p.degree):
        if a[k - 1] != 0 and a[k + 1] != 0:
            entries[k] = a[k] * a[k] / (a[k - 1] * a[k + 1])
    return QSeq(p.degree, entries)


def coeffs_from_q(a0: RationalLike, a1: RationalLike, q: tp.Sequence[RationalLike]) -> Poly:
    """Rebuild the unique positive polynomial with given `a_0`, `a_1` and q-sequence.

    Uses the recurrence `a_{k+1} = a_k^2 / (q_k a_{k-1})`, which unrolls to
    `a_k = a_1 (a_1/a_0)^(k-1) / prod_{i=1}^{k-1} (q_i^(k-i))`.
    """
    a0, a1 = to_fraction(a0), to_fraction(a1)
    q = [to_fraction(v) for v in q]
    if a0 <= 0 or a1 <= 0:
        raise InvalidQSequence(f"a0 and a1 must be positive, got {a0} and {a1}.")
    bad = [i + 1 for i, v in enumerate(q) if v <= 0]
    if bad:
        raise InvalidQSequence(f"q-values must be positive; offending indices: {bad}")
    coeffs = [a0, a1]
    for k, q_k in enumerate(q, start=1):
        coeffs.append(coeffs[k] * coeffs[k] / (q_k * coeffs[k - 1]))
    return Poly(coeffs)


def positivity_class(p: Poly) -> PositivityTag:
    a = p.coeffs
    if not a:
        return PositivityTag.Other
    even_positive = all(a[k] > 0 for k in range(0, len(a), 2))
    odd_positive = all(a[k] > 0 for k in range(1, len(a), 2))
    if even_positive and odd_positive:
        return PositivityTag.AllPositive
    if even_positive:
        return PositivityTag.EvenPositive
    if odd_positive and len(a) > 1:
        return PositivityTag.OddPositive
    return PositivityTag.Other


def is_all_positive(p: Poly) -> bool:
    return not p.is_zero and all(c > 0 for c in p.coeffs)
