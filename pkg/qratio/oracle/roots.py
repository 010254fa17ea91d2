"""Ground-truth real root counts with multiplicity, and exact isolating intervals."""
from __future__ import annotations

__all__ = [
    "RootInterval",
    "RootReport",
    "cauchy_bound",
    "count_real_roots",
    "count_real_roots_with_known_root",
]

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from qratio.exceptions import ZeroPolynomial
from qratio.poly import Poly, deflate
from qratio.utilities import RationalLike, fraction_str, to_fraction

from .squarefree import square_free_decompose
from .sturm import sturm_chain, variations_at, variations_at_infinity

_LOGGER = logging.getLogger("qratio")


@dataclass(frozen=True, slots=True)
class RootInterval:
    """Half-open interval `(lo, hi]` holding exactly one distinct real root, or the exact root when `lo == hi`."""

    lo: Fraction
    hi: Fraction
    multiplicity: int
    factor: Poly = field(compare=False, repr=False)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: RationalLike) -> bool:
        x = to_fraction(x)
        if self.is_exact:
            return x == self.lo
        return self.lo < x <= self.hi

    def refine(self, max_width: RationalLike) -> RootInterval:
        """Bisect until the width is at most `max_width`. Exact roots are returned unchanged."""
        max_width = to_fraction(max_width)
        if self.is_exact or self.width <= max_width:
            return self
        chain = sturm_chain(self.factor)
        lo, hi = self.lo, self.hi
        v_lo = variations_at(chain, lo)
        while hi - lo > max_width:
            mid = (lo + hi) / 2
            v_mid = variations_at(chain, mid)
            if v_lo - v_mid == 1:
                hi = mid
            else:
                lo, v_lo = mid, v_mid
        return RootInterval(lo, hi, self.multiplicity, self.factor)

    def to_json(self) -> dict:
        return {"lo": fraction_str(self.lo), "hi": fraction_str(self.hi), "multiplicity": self.multiplicity}


@dataclass(frozen=True, slots=True)
class RootReport:
    degree: int
    total_with_multiplicity: int
    distinct_count: int
    square_free_factors: list[tuple[Poly, int]]
    isolating_intervals: list[RootInterval] | None = None

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "total_with_multiplicity": self.total_with_multiplicity,
            "distinct_count": self.distinct_count,
            "square_free_factors": [
                {"factor": [fraction_str(c) for c in factor.coeffs], "multiplicity": multiplicity}
                for factor, multiplicity in self.square_free_factors
            ],
            "isolating_intervals": (
                None if self.isolating_intervals is None else [i.to_json() for i in self.isolating_intervals]
            ),
        }


def cauchy_bound(p: Poly) -> Fraction:
    """`1 + max |a_k / a_n|`. Every complex root lies strictly inside this radius."""
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def _real_root_count(factor: Poly) -> tuple[list[Poly], int]:
    chain = sturm_chain(factor)
    return chain, variations_at_infinity(chain, positive=False) - variations_at_infinity(chain, positive=True)


def _isolate(factor: Poly, chain: list[Poly], count: int, multiplicity: int) -> list[RootInterval]:
    """Bisection on `(-B, B]` with exact midpoints. `factor` must be square-free."""
    if count == 0:
        return []
    bound = cauchy_bound(factor)
    intervals = []
    stack = [(-bound, bound, variations_at(chain, -bound), variations_at(chain, bound))]
    while stack:
        lo, hi, v_lo, v_hi = stack.pop()
        inside = v_lo - v_hi
        if inside == 0:
            continue
        if inside == 1:
            intervals.append(RootInterval(lo, hi, multiplicity, factor))
            continue
        mid = (lo + hi) / 2
        v_mid = variations_at(chain, mid)
        stack.append((mid, hi, v_mid, v_hi))
        stack.append((lo, mid, v_lo, v_mid))
    return intervals


def _separate(intervals: list[RootInterval]) -> list[RootInterval]:
    """Shrink intervals from different factors until no two overlap (roots of coprime factors are distinct)."""
    intervals = sorted(intervals, key=lambda i: (i.lo, i.hi))
    changed = True
    while changed:
        changed = False
        for k in range(len(intervals) - 1):
            left, right = intervals[k], intervals[k + 1]
            if left.hi > right.lo or (right.is_exact and left.contains(right.lo)):
                wider = k if left.width >= right.width else k + 1
                intervals[wider] = intervals[wider].refine(intervals[wider].width / 2)
                intervals.sort(key=lambda i: (i.lo, i.hi))
                changed = True
                break
    return intervals


def count_real_roots(p: Poly, isolate: bool = True) -> RootReport:
    """Count real roots with multiplicity by running Sturm's theorem on each square-free factor over the whole line.

    `isolate=False` skips building isolating intervals, which is all bulk sweeps need.
    """
    if p.is_zero:
        raise ZeroPolynomial("Zero polynomial has infinitely many roots.")
    factors = square_free_decompose(p)
    total = 0
    distinct = 0
    intervals = [] if isolate else None
    for factor, multiplicity in factors:
        chain, count = _real_root_count(factor)
        total += multiplicity * count
        distinct += count
        if isolate:
            intervals += _isolate(factor, chain, count, multiplicity)
    if isolate:
        intervals = _separate(intervals)
    return RootReport(p.degree, total, distinct, factors, intervals)


def count_real_roots_with_known_root(p: Poly, root: RationalLike, isolate: bool = True) -> RootReport:
    """Same report as `count_real_roots`, but divides out a known rational root by synthetic division first.

    Only the cofactor goes through Sturm, which keeps high-multiplicity towers like `(x+1)^k * quadratic` cheap.
    """
    root = to_fraction(root)
    multiplicity, cofactor = deflate(p, root)
    if multiplicity == 0:
        _LOGGER.debug(f"{root} is not a root; falling back to full decomposition.")
        return count_real_roots(p, isolate)
    rest = count_real_roots(cofactor, isolate)
    linear = Poly([-root, 1])
    factors = [(linear, multiplicity)] + rest.square_free_factors
    intervals = None
    if isolate:
        intervals = _separate([RootInterval(root, root, multiplicity, linear)] + rest.isolating_intervals)
    return RootReport(
        p.degree, rest.total_with_multiplicity + multiplicity, rest.distinct_count + 1, factors, intervals
    )
