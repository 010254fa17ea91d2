"""Dense univariate polynomials over the rationals.

Coefficients are `fractions.Fraction` values stored in ascending degree order. `Fraction` keeps every value in lowest
terms after each operation, so no extra normalization pass is needed anywhere in the package.
"""
from __future__ import annotations

__all__ = ["Poly", "poly_gcd"]

import typing as tp
from fractions import Fraction
from math import comb

from qratio.exceptions import ZeroPolynomial
from qratio.utilities import RationalLike, to_fraction


class Poly:
    """Immutable exact polynomial `a_0 + a_1 x + ... + a_n x^n`.

    The zero polynomial has an empty coefficient tuple and reports degree 0 (check `is_zero` where it matters).
    """

    __slots__ = ("_coeffs",)

    _coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: tp.Iterable[RationalLike] = ()):
        values = [to_fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs = tuple(values)

    @classmethod
    def _from_fractions(cls, values: list[Fraction]) -> Poly:
        """Skip conversion for values already known to be `Fraction`."""
        while values and values[-1] == 0:
            values.pop()
        p = object.__new__(cls)
        p._coeffs = tuple(values)
        return p

    # region Constructors

    @classmethod
    def constant(cls, c: RationalLike) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def linear_power(cls, root: RationalLike, power: int) -> Poly:
        """`(x - root) ** power`, expanded with binomial coefficients."""
        r = to_fraction(root)
        return cls._from_fractions([comb(power, k) * (-r) ** (power - k) for k in range(power + 1)])

    @classmethod
    def product(cls, factors: tp.Iterable[Poly]) -> Poly:
        result = cls([1])
        for f in factors:
            result = result * f
        return result

    # endregion

    # region Properties

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return max(len(self._coeffs) - 1, 0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        if not self._coeffs:
            raise ZeroPolynomial("Zero polynomial has no leading coefficient.")
        return self._coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        """Coefficient of `x^k`, zero outside `0..degree` (including negative `k`)."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    # endregion

    # region Arithmetic

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> Poly:
        return Poly._from_fractions([-c for c in self._coeffs])

    def __add__(self, other: Poly | RationalLike) -> Poly:
        other = _as_poly(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return Poly._from_fractions([self[k] + other[k] for k in range(size)])

    __radd__ = __add__

    def __sub__(self, other: Poly | RationalLike) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: Poly | RationalLike) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other: Poly | RationalLike) -> Poly:
        if not isinstance(other, Poly):
            c = to_fraction(other)
            return Poly._from_fractions([c * a for a in self._coeffs])
        if self.is_zero or other.is_zero:
            return Poly()
        result = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                result[i + j] += a * b
        return Poly._from_fractions(result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> Poly:
        if power < 0:
            raise ValueError("Polynomial powers must be non-negative.")
        result = Poly([1])
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __divmod__(self, divisor: Poly) -> tuple[Poly, Poly]:
        if divisor.is_zero:
            raise ZeroDivisionError("Polynomial division by zero polynomial.")
        remainder = list(self._coeffs)
        d = len(divisor._coeffs) - 1
        lead = divisor._coeffs[-1]
        if len(remainder) - 1 < d:
            return Poly(), self
        quotient = [Fraction(0)] * (len(remainder) - d)
        for shift in range(len(remainder) - 1 - d, -1, -1):
            c = remainder[shift + d] / lead
            quotient[shift] = c
            if c:
                for k, b in enumerate(divisor._coeffs):
                    remainder[shift + k] -= c * b
        return Poly._from_fractions(quotient), Poly._from_fractions(remainder[:d])

    def __floordiv__(self, divisor: Poly) -> Poly:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: Poly) -> Poly:
        return divmod(self, divisor)[1]

    def exact_div(self, divisor: Poly) -> Poly:
        """Quotient of a division known to be exact."""
        quotient, remainder = divmod(self, divisor)
        if not remainder.is_zero:
            raise ArithmeticError(f"{divisor} does not divide {self} exactly.")
        return quotient

    def monic(self) -> Poly:
        if self.is_zero:
            raise ZeroPolynomial("Cannot normalize the zero polynomial.")
        return self * (1 / self.leading)

    def __call__(self, x: RationalLike) -> Fraction:
        """Exact Horner evaluation."""
        x = to_fraction(x)
        value = Fraction(0)
        for c in reversed(self._coeffs):
            value = value * x + c
        return value

    def derivative(self) -> Poly:
        return Poly._from_fractions([k * self._coeffs[k] for k in range(1, len(self._coeffs))])

    def shift(self, h: RationalLike) -> Poly:
        """`p(x + h)`."""
        h = to_fraction(h)
        result = Poly()
        x_plus_h = Poly._from_fractions([h, Fraction(1)])
        for c in reversed(self._coeffs):
            result = result * x_plus_h + c
        return result

    # endregion

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _as_poly(value: Poly | RationalLike) -> Poly:
    return value if isinstance(value, Poly) else Poly([value])


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm (zero only if both inputs are zero)."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    if a.is_zero:
        return a
    return a.monic()
