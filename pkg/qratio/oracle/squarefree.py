from __future__ import annotations

__all__ = ["square_free_decompose", "square_free_part"]

from qratio.exceptions import ZeroPolynomial
from qratio.poly import Poly, poly_gcd


def square_free_decompose(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm over the rationals.

    Returns monic, square-free, pairwise coprime factors `g_i` with multiplicities `i` such that
    `p = lc(p) * prod g_i^i`. Constant input gives an empty list.
    """
    if p.is_zero:
        raise ZeroPolynomial("Cannot decompose the zero polynomial.")
    if p.is_constant:
        return []

    f = p.monic()
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()

    factors = []
    multiplicity = 1
    while not b.is_constant:
        g = poly_gcd(b, d)
        if not g.is_constant:
            factors.append((g, multiplicity))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        multiplicity += 1
    return factors


def square_free_part(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of `p`."""
    if p.is_zero:
        raise ZeroPolynomial("Zero polynomial has no square-free part.")
    if p.is_constant:
        return Poly([1])
    f = p.monic()
    return f.exact_div(poly_gcd(f, f.derivative()))
