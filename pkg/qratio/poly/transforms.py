"""Coefficient transforms and calculus. The first two leave the q-sequence invariant (up to index reversal)."""
from __future__ import annotations

__all__ = [
    "scale_transform",
    "reverse",
    "derivative",
    "antiderivative_vanishing_at",
    "eval_poly",
    "segment",
    "deflate",
]

from fractions import Fraction

from qratio.exceptions import DegreeDrop, InvalidScale, ZeroPolynomial
from qratio.utilities import RationalLike, to_fraction

from .core import Poly


def scale_transform(p: Poly, a: RationalLike, b: RationalLike) -> Poly:
    """`a * p(b x)`. Coefficient `k` is multiplied by `a b^k`, which cancels in every `q_k`."""
    a, b = to_fraction(a), to_fraction(b)
    if a == 0 or b == 0:
        raise InvalidScale(f"Scale factors must be non-zero, got a={a}, b={b}.")
    return Poly(a * c * b ** k for k, c in enumerate(p.coeffs))


def reverse(p: Poly) -> Poly:
    """`x^n p(1/x)`, i.e. the coefficient list read backwards. Maps `q_j` to `q_{n-j}`."""
    if p.is_zero:
        raise ZeroPolynomial("Cannot reverse the zero polynomial.")
    result = Poly(reversed(p.coeffs))
    if p.coeffs[0] == 0:
        raise DegreeDrop(
            f"Constant term is zero, so reversal drops degree {p.degree} to {result.degree}.", result=result
        )
    return result


def derivative(p: Poly) -> Poly:
    return p.derivative()


def antiderivative_vanishing_at(p: Poly, c: RationalLike) -> Poly:
    """The primitive `F` of `p` with `F(c) = 0`."""
    c = to_fraction(c)
    f = Poly([Fraction(0)] + [coeff / (k + 1) for k, coeff in enumerate(p.coeffs)])
    return f - f(c)


def eval_poly(p: Poly, x: RationalLike) -> Fraction:
    return p(x)


def segment(p: Poly, i: int, j: int) -> Poly:
    """`a_i x^i + ... + a_j x^j`, kept in place (not divided by `x^i`)."""
    if not 0 <= i <= j <= p.degree:
        raise IndexError(f"Segment [{i}, {j}] is out of range for degree {p.degree}.")
    return Poly([0] * i + list(p.coeffs[i:j + 1]))


def deflate(p: Poly, root: RationalLike) -> tuple[int, Poly]:
    """Multiplicity of the rational `root` in `p` and the cofactor `p / (x - root)^multiplicity`.

    Synthetic division only, so this stays linear in the degree per removed factor.
    """
    if p.is_zero:
        raise ZeroPolynomial("Cannot deflate the zero polynomial.")
    r = to_fraction(root)
    multiplicity = 0
    current = list(p.coeffs)
    while len(current) > 1:
        quotient = [Fraction(0)] * (len(current) - 1)
        carry = Fraction(0)
        for k in range(len(current) - 1, 0, -1):
            carry = carry * r + current[k]
            quotient[k - 1] = carry
        if carry * r + current[0] != 0:
            break
        current = quotient
        multiplicity += 1
    return multiplicity, Poly(current)
