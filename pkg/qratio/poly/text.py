"""Polynomial text format: one coefficient per line in ascending degree, each an optionally signed integer or `p/q`.

Blank lines and `#` comments (whole-line or trailing) are ignored.
"""
from __future__ import annotations

__all__ = ["parse_poly_text", "format_poly_text", "read_poly", "write_poly"]

import re
from fractions import Fraction
from pathlib import Path

from qratio.exceptions import PolyParseError

from .core import Poly

_COEFF_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_poly_text(text: str) -> Poly:
    coeffs = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        token = line.split("#", 1)[0].strip()
        if not token:
            continue
        if not _COEFF_RE.match(token):
            raise PolyParseError(f"Invalid coefficient {token!r} (expected integer or 'p/q').", line_number)
        try:
            coeffs.append(Fraction(token))
        except ZeroDivisionError:
            raise PolyParseError(f"Zero denominator in {token!r}.", line_number)
    if not coeffs:
        raise PolyParseError("No coefficients found.")
    return Poly(coeffs)


def format_poly_text(p: Poly, header: str = "") -> str:
    """Inverse of `parse_poly_text`. Trailing zeros were already stripped by `Poly`, so `0` is written for zero."""
    lines = [f"# {line}" for line in header.splitlines()]
    lines += [str(c) for c in p.coeffs] or ["0"]
    return "\n".join(lines) + "\n"


def read_poly(path: Path | str) -> Poly:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise PolyParseError(f"Polynomial file does not exist: {path}")
    except UnicodeDecodeError:
        raise PolyParseError(f"Polynomial file is not UTF-8 text: {path}")
    return parse_poly_text(text)


def write_poly(path: Path | str, p: Poly, header: str = ""):
    Path(path).write_text(format_poly_text(p, header), encoding="utf-8")
