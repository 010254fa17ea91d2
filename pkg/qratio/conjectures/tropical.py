from __future__ import annotations

__all__ = ["weighted_points", "upper_hull_indices", "tropical_corner_count"]

from fractions import Fraction
from math import comb

from qratio.exceptions import NotApplicableError
from qratio.poly import Poly


def weighted_points(p: Poly) -> list[tuple[int, Fraction]]:
    """`(k, a_k C(n, k))` for every non-zero coefficient. The tropical graph lives on `(k, log w_k)`."""
    n = p.degree
    if p.is_zero:
        raise NotApplicableError("Zero polynomial has no tropical graph.")
    negative = [k for k, c in enumerate(p.coeffs) if c < 0]
    if negative:
        raise NotApplicableError(f"Negative coefficients at indices {negative}; logarithms are undefined.")
    return [(k, c * comb(n, k)) for k, c in enumerate(p.coeffs) if c != 0]


def _strictly_above(left: tuple[int, Fraction], middle: tuple[int, Fraction], right: tuple[int, Fraction]) -> bool:
    """Is `(j, log w_j)` strictly above the chord from `(i, log w_i)` to `(k, log w_k)`?

    Exponentiating `(k-i) log w_j > (k-j) log w_i + (j-i) log w_k` gives an exact integer-power comparison.
    """
    (i, w_i), (j, w_j), (k, w_k) = left, middle, right
    return w_j ** (k - i) > w_i ** (k - j) * w_k ** (j - i)


def upper_hull_indices(points: list[tuple[int, Fraction]]) -> list[int]:
    """Monotone chain over increasing `k`, keeping only strict vertices (collinear points are dropped)."""
    hull: list[tuple[int, Fraction]] = []
    for point in points:
        while len(hull) >= 2 and not _strictly_above(hull[-2], hull[-1], point):
            hull.pop()
        hull.append(point)
    return [k for k, _ in hull]


def tropical_corner_count(p: Poly) -> int:
    """Corners of `t -> max_k (log a_k + k t + log C(n, k))`: upper hull vertices minus one.

    Zero coefficients contribute no term and are skipped.
    """
    return max(len(upper_hull_indices(weighted_points(p))) - 1, 0)
