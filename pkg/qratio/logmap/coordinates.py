"""Logarithmic coordinates on monic polynomials with constant term 1 and positive coefficients.

`alpha_j = log a_j` and `kappa_j = 2 alpha_j - alpha_{j-1} - alpha_{j+1} = log q_j`. Floats here are for reporting only;
every decision elsewhere is an exact comparison of the retained rational `q_j`.
"""
from __future__ import annotations

__all__ = ["LogPoint", "log_image", "normalize_hat", "is_normalized", "kappa_matrix", "kappa_matrix_determinant"]

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from qratio.exceptions import BadParams, NotApplicableError, QRatioError
from qratio.poly import Poly, is_all_positive, q_sequence, scale_transform
from qratio.utilities import fraction_list


@dataclass(frozen=True, slots=True)
class LogPoint:
    source: Poly
    q: tuple[Fraction, ...]
    alpha: np.ndarray
    kappa: np.ndarray

    def to_json(self) -> dict:
        return {
            "coefficients": fraction_list(self.source.coeffs),
            "q": fraction_list(self.q),
            "alpha_float": [float(v) for v in self.alpha],
            "kappa_float": [float(v) for v in self.kappa],
        }


def _log_fraction(value: Fraction) -> float:
    """`log` of an exact positive rational without overflowing a float conversion."""
    return math.log(value.numerator) - math.log(value.denominator)


def is_normalized(p: Poly) -> bool:
    return not p.is_zero and p.coeffs[0] == 1 and p.leading == 1


def _exact_root(value: Fraction, n: int) -> Fraction | None:
    """The rational `n`-th root of `value > 0`, if there is one."""
    roots = []
    for part in (value.numerator, value.denominator):
        root = round(part ** (1 / n)) if part.bit_length() < 1000 else None
        if root is None:
            return None
        for candidate in (root - 1, root, root + 1):
            if candidate > 0 and candidate ** n == part:
                roots.append(candidate)
                break
        else:
            return None
    return Fraction(roots[0], roots[1])


def normalize_hat(p: Poly) -> Poly:
    """`a p(b x)` with constant term and leading coefficient 1, when `b = (a_0/a_n)^(1/n)` is rational.

    Raises `NotApplicableError` otherwise; `log_image` normalizes in log space and never needs this.
    """
    if p.degree < 1 or not is_all_positive(p):
        raise NotApplicableError("Normalization needs degree >= 1 and all coefficients positive.")
    b = _exact_root(p.coeffs[0] / p.leading, p.degree)
    if b is None:
        raise NotApplicableError(f"(a_0 / a_n)^(1/{p.degree}) is irrational; no rational normalization exists.")
    return scale_transform(p, 1 / p.coeffs[0], b)


def log_image(p: Poly) -> LogPoint:
    """Log coordinates of `p` after the quasihomogeneous normalization to `a_0 = a_n = 1` (done in log space)."""
    n = p.degree
    if n < 2 or not is_all_positive(p):
        raise NotApplicableError("log_image needs degree >= 2 and all coefficients positive.")
    logs = np.array([_log_fraction(c) for c in p.coeffs], dtype=np.float64)
    beta = (logs[0] - logs[n]) / n
    alpha_full = logs - logs[0] + beta * np.arange(n + 1)
    alpha_full[0] = 0.0
    alpha_full[n] = 0.0
    kappa = 2 * alpha_full[1:n] - alpha_full[0:n - 1] - alpha_full[2:n + 1]
    return LogPoint(p, tuple(q_sequence(p).values()), alpha_full[1:n].copy(), kappa)


def kappa_matrix(n: int) -> sympy.Matrix:
    """The `(n-1) x (n-1)` matrix taking `alpha` to `kappa`: 2 on the diagonal, -1 beside it."""
    if n < 2:
        raise BadParams(f"kappa matrix needs n >= 2, got {n}.")
    size = n - 1
    return sympy.Matrix(size, size, lambda i, j: 2 if i == j else (-1 if abs(i - j) == 1 else 0))


def kappa_matrix_determinant(n: int) -> int:
    """Exact determinant (Bareiss elimination); always equals `n`, so the alpha-to-kappa map is invertible."""
    det = int(kappa_matrix(n).det(method="bareiss"))
    if det != n:
        raise QRatioError(f"kappa matrix determinant for n={n} is {det}, expected {n}.")
    return det
