"""Explicit polynomial families that make the end-ratio criteria sharp, and fixtures with a given real root count."""
from __future__ import annotations

__all__ = [
    "sharp_thm2",
    "sharp_thm2_q_value",
    "base_pr1",
    "integrate_preserving",
    "sharp_pr1",
    "hutchinson_extremal",
    "stratum_representative",
    "theorem2_factored_form",
]

import logging
from fractions import Fraction

from qratio.criteria import FactoredForm
from qratio.exceptions import BadInput, BadParams
from qratio.poly import Poly, antiderivative_vanishing_at, coeffs_from_q, deflate, is_all_positive, reverse

_LOGGER = logging.getLogger("qratio")


def sharp_thm2(n: int) -> Poly:
    """`(x+1)^(n-2) (x^2 + (n-4)/(n-2) x + 1)`: `n-2` real roots and `q_1 + q_{n-1}` exactly at the sum bound."""
    if n < 4:
        raise BadParams(f"sharp_thm2 needs n >= 4, got {n}.")
    return Poly.linear_power(-1, n - 2) * Poly([1, Fraction(n - 4, n - 2), 1])


def sharp_thm2_q_value(n: int) -> Fraction:
    """Common value of `q_1` and `q_{n-1}` on `sharp_thm2(n)`."""
    return Fraction(2 * n * (n - 3), (n - 2) ** 2)


def base_pr1(m: int) -> Poly:
    """`(x+1)^m (x^2 + (m-2)/m x + 1)`, the degree `m+2` seed of the pair-threshold family."""
    if m < 2:
        raise BadParams(f"m must be at least 2, got {m}.")
    return Poly.linear_power(-1, m) * Poly([1, Fraction(m - 2, m), 1])


def integrate_preserving(f: Poly) -> Poly:
    """Primitive of `f = (x+1)^m (a x^2 + b x + c)` that vanishes at -1.

    With positive coefficients and an irreducible quadratic, the result is `(x+1)^(m+1)` times another irreducible
    quadratic, its coefficients stay positive, and its constant term `-F(-1)` (for `F(0) = 0`) is positive.
    """
    if not is_all_positive(f):
        raise BadInput("integrate_preserving needs all coefficients positive.")
    multiplicity, cofactor = deflate(f, -1)
    if cofactor.degree != 2:
        raise BadInput(
            f"Expected (x+1)^m times a quadratic; after removing (x+1)^{multiplicity} the cofactor has degree "
            f"{cofactor.degree}."
        )
    c, b, a = cofactor.coeffs
    if b * b - 4 * a * c >= 0:
        raise BadInput(f"Quadratic cofactor {cofactor} is not irreducible over the reals.")
    return antiderivative_vanishing_at(f, -1)


def sharp_pr1(n: int, m: int, j: int) -> Poly:
    """Degree `n` polynomial with `n-2` real roots whose `q_j` and `q_{m+j}` sit exactly at the pair thresholds.

    Integrate the seed `n-m-j-1` times, reverse, then integrate `j-1` more times.
    """
    if n < 4 or not 2 <= m <= n - 2 or not 1 <= j <= n - m - 1:
        raise BadParams(f"sharp_pr1 needs n >= 4, 2 <= m <= n-2, 1 <= j <= n-m-1; got (n, m, j) = ({n}, {m}, {j}).")
    p = base_pr1(m)
    for _ in range(n - m - j - 1):
        p = integrate_preserving(p)
    p = reverse(p)
    for _ in range(j - 1):
        p = integrate_preserving(p)
    _LOGGER.debug(f"Built sharp_pr1({n}, {m}, {j}).")
    return p


def hutchinson_extremal(n: int) -> Poly:
    """Every `q_k` equal to 4, the boundary of the Hutchinson region."""
    if n < 2:
        raise BadParams(f"hutchinson_extremal needs n >= 2, got {n}.")
    return coeffs_from_q(1, 1, [4] * (n - 1))


def stratum_representative(n: int, real_roots: int) -> Poly:
    """`(x+1)(x+2)...(x+l) (x^2+1)^((n-l)/2)`: positive coefficients and exactly `l` simple real roots."""
    if not 0 <= real_roots <= n or (n - real_roots) % 2:
        raise BadParams(f"Need 0 <= l <= n with n - l even; got n={n}, l={real_roots}.")
    linear = Poly.product(Poly([k, 1]) for k in range(1, real_roots + 1))
    return linear * Poly([1, 0, 1]) ** ((n - real_roots) // 2)


def theorem2_factored_form(n: int) -> FactoredForm:
    """`sharp_thm2(n)` as quadratic factors: `(x+1)^2` pairs, a special factor, and `(x+1)` when `n` is odd."""
    if n < 4:
        raise BadParams(f"theorem2_factored_form needs n >= 4, got {n}.")
    half = n // 2
    pairs = [(1, 1)] * (half - 1)
    if n % 2 == 0:
        return FactoredForm.build(pairs, Fraction(half - 2, 2 * (half - 1)))
    return FactoredForm.build(pairs, Fraction(2 * half - 3, 2 * (2 * half - 1)), c=1)
