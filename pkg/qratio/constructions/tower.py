"""The tower `Q_15, Q_16, ...` of primitives vanishing at -1.

`Q_15` has 13 real roots (all at -1) but `q_8, q_9, q_10 < 1`, and each primitive keeps that pattern shifted up by one
index. Integration rescales ratios by `q_{k+1}(Q_{n+1}) = q_k(Q_n) k (k+2) / (k+1)^2`, which telescopes into
`q_tail_law`.
"""
from __future__ import annotations

__all__ = ["Q15_COEFFS", "Q15_FACTORED", "TOWER_BASE", "counterexample_Q", "q_tail_law"]

import logging
import threading
from fractions import Fraction

from qratio.exceptions import BadParams, QRatioError
from qratio.poly import Poly, antiderivative_vanishing_at, q_sequence

_LOGGER = logging.getLogger("qratio")

TOWER_BASE = 15

Q15_COEFFS = tuple(
    Fraction(c)
    for c in (
        "83/720720", "1/728", "17/2288", "19/792", "9/176", "3/40", "11/144", "3/56",
        "3/112", "1/72", "1/80", "1/88", "1/144", "3/1144", "9/16016", "19/360360",
    )
)
Q15_FACTORED = (
    Poly.linear_power(-1, 13),
    Poly(["83/720720", "-89/720720", "19/360360"]),
)


def _validated_q15() -> Poly:
    expanded = Poly(Q15_COEFFS)
    if expanded != Poly.product(Q15_FACTORED):
        raise QRatioError("Q_15 coefficient list does not match its factored form.")
    return expanded


_TOWER = [_validated_q15()]
_TOWER_LOCK = threading.Lock()


def counterexample_Q(n: int) -> Poly:
    """`Q_n` for `n >= 15`. Built sequentially and cached, since each level is the primitive of the previous one."""
    if n < TOWER_BASE:
        raise BadParams(f"counterexample_Q needs n >= {TOWER_BASE}, got {n}.")
    with _TOWER_LOCK:
        while len(_TOWER) <= n - TOWER_BASE:
            _TOWER.append(antiderivative_vanishing_at(_TOWER[-1], -1))
            _LOGGER.debug(f"Integrated tower up to Q_{TOWER_BASE + len(_TOWER) - 1}.")
        return _TOWER[n - TOWER_BASE]


def q_tail_law(n: int, index: int) -> Fraction:
    """Exact `q_index(Q_n)` for `n - 14 <= index <= n - 1`, without building `Q_n`.

    The ratio started at index `b = index - (n - 15)` of `Q_15` and was rescaled by
    `prod_{k=b}^{index-1} k (k+2) / (k+1)^2 = (b / (b+1)) ((index+1) / index)`.
    """
    if n < TOWER_BASE:
        raise BadParams(f"q_tail_law needs n >= {TOWER_BASE}, got {n}.")
    base_index = index - (n - TOWER_BASE)
    if not 1 <= base_index <= TOWER_BASE - 1:
        raise BadParams(
            f"Index {index} of Q_{n} is not determined by Q_{TOWER_BASE} (need {n - 14} <= index <= {n - 1})."
        )
    return q_sequence(_TOWER[0])[base_index] * Fraction(base_index, base_index + 1) * Fraction(index + 1, index)
