from __future__ import annotations

__all__ = [
    "sign",
    "sign_changes",
    "sturm_chain",
    "variations_at",
    "variations_at_infinity",
    "count_in_interval",
]

import typing as tp
from fractions import Fraction

from qratio.exceptions import BadInterval, ZeroPolynomial
from qratio.poly import Poly
from qratio.utilities import RationalLike, to_fraction

from .squarefree import square_free_part


def sign(value: Fraction | int) -> int:
    return (value > 0) - (value < 0)


def sign_changes(seq: tp.Iterable[RationalLike]) -> int:
    """Number of sign alternations after deleting zero entries."""
    changes = 0
    previous = 0
    for value in seq:
        s = sign(to_fraction(value))
        if s == 0:
            continue
        if previous and s != previous:
            changes += 1
        previous = s
    return changes


def sturm_chain(p: Poly) -> list[Poly]:
    """Signed remainder sequence `p, p', -rem(p, p'), ...`, each member scaled by a positive constant.

    Scaling by `1/|lc|` keeps every sign unchanged and stops coefficient growth.
    """
    if p.is_zero:
        raise ZeroPolynomial("Sturm chain of the zero polynomial is undefined.")
    chain = [p * (1 / abs(p.leading))]
    if p.is_constant:
        return chain
    dp = p.derivative()
    chain.append(dp * (1 / abs(dp.leading)))
    while True:
        remainder = -(chain[-2] % chain[-1])
        if remainder.is_zero:
            break
        chain.append(remainder * (1 / abs(remainder.leading)))
    return chain


def variations_at(chain: list[Poly], x: RationalLike) -> int:
    return sign_changes(member(x) for member in chain)


def variations_at_infinity(chain: list[Poly], positive: bool) -> int:
    if positive:
        return sign_changes(member.leading for member in chain)
    return sign_changes(member.leading * (-1) ** member.degree for member in chain)


def count_in_interval(p: Poly, lo: RationalLike, hi: RationalLike, closed: bool = False) -> int:
    """Distinct real roots of `p` in `(lo, hi)` (or `[lo, hi]` when `closed`).

    Sturm's theorem on the square-free part counts roots in the half-open `(lo, hi]`, even when `lo` or `hi` is itself
    a root. The endpoints are then corrected by direct evaluation.
    """
    lo, hi = to_fraction(lo), to_fraction(hi)
    if lo >= hi:
        raise BadInterval(f"Interval needs lo < hi, got [{lo}, {hi}].")
    if p.is_zero:
        raise ZeroPolynomial("Zero polynomial has infinitely many roots.")
    chain = sturm_chain(square_free_part(p))
    count = variations_at(chain, lo) - variations_at(chain, hi)
    if closed:
        if p(lo) == 0:
            count += 1
    elif p(hi) == 0:
        count -= 1
    return count
