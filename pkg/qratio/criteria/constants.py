"""Certified rational enclosures of `1 / cos^2(pi / (m + 2))`."""
from __future__ import annotations

__all__ = ["certified_inv_cos_sq"]

import functools
import logging
import threading
from fractions import Fraction

from mpmath import iv
from mpmath.libmp import to_rational

from qratio.config import DEFAULT_PRECISION_BITS
from qratio.exceptions import BadParams

from .certificates import CertifiedConstant

_LOGGER = logging.getLogger("qratio")

# cos(pi/3)^2 = 1/4, cos(pi/4)^2 = 1/2, cos(pi/6)^2 = 3/4.
_EXACT_VALUES = {1: Fraction(4), 2: Fraction(2), 4: Fraction(4, 3)}

# `iv.prec` is global to the mpmath interval context.
_IV_LOCK = threading.Lock()


def _fraction_from_raw(raw_mpf) -> Fraction:
    numerator, denominator = to_rational(raw_mpf)
    return Fraction(numerator, denominator)


@functools.lru_cache(maxsize=None)
def certified_inv_cos_sq(m: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> CertifiedConstant:
    """Enclose `1/cos^2(pi/(m+2))` with `upper - lower <= 2^-precision_bits * max(1, upper)`.

    Exact values are returned for `m + 2` in {3, 4, 6}. Otherwise mpmath interval arithmetic (outward rounded) is run
    with guard bits, doubling the guard until the width target is met.
    """
    if m < 1:
        raise BadParams(f"m must be at least 1, not {m}.")
    target = f"1/cos^2(pi/{m + 2})"
    if m in _EXACT_VALUES:
        value = _EXACT_VALUES[m]
        return CertifiedConstant(value, value, target, precision_bits)

    guard_bits = 16
    while True:
        with _IV_LOCK:
            previous_prec = iv.prec
            try:
                iv.prec = precision_bits + guard_bits
                cosine = iv.cos(iv.pi / (m + 2))
                enclosure = 1 / (cosine * cosine)
                lower_raw, upper_raw = enclosure._mpi_
            finally:
                iv.prec = previous_prec
        lower, upper = _fraction_from_raw(lower_raw), _fraction_from_raw(upper_raw)
        if upper - lower <= Fraction(1, 2 ** precision_bits) * max(Fraction(1), upper):
            return CertifiedConstant(lower, upper, target, precision_bits)
        _LOGGER.debug(f"Enclosure of {target} too wide with {guard_bits} guard bits; retrying.")
        guard_bits *= 2
