from __future__ import annotations

__all__ = ["RationalLike", "word_wrap", "to_fraction", "fraction_str", "fraction_list"]

import textwrap
import typing as tp
from fractions import Fraction
from numbers import Rational

RationalLike = tp.Union[int, Fraction, str, Rational]


def word_wrap(text: str, line_limit: int = 50) -> str:
    """Wrap a help string without breaking words."""
    return "\n".join(textwrap.wrap(text, width=line_limit, break_long_words=False, break_on_hyphens=False))


def to_fraction(value: RationalLike) -> Fraction:
    """Exact conversion. Floats are refused so that nothing inexact leaks into coefficient arithmetic."""
    if isinstance(value, float):
        raise TypeError(f"Refusing inexact float value {value!r}; pass an int, Fraction, or 'p/q' string.")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def fraction_str(value: Fraction | int) -> str:
    """'p/q' (or 'p' for integers), the JSON form of every exact rational."""
    return str(Fraction(value))


def fraction_list(values: tp.Iterable[Fraction | int]) -> list[str]:
    return [fraction_str(v) for v in values]
