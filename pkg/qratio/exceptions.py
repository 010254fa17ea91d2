"""Exception hierarchy. Everything raised on purpose by `qratio` derives from `QRatioError`.

Subclasses of `QRatioInputError` describe bad caller input and map to command line exit code 2.
"""
from __future__ import annotations

__all__ = [
    "QRatioError",
    "QRatioInputError",
    "DegreeTooSmall",
    "InvalidScale",
    "DegreeDrop",
    "InvalidQSequence",
    "ZeroPolynomial",
    "PolyParseError",
    "BadInterval",
    "BadParams",
    "BadInput",
    "BadSpec",
    "NotApplicableError",
    "ConjectureCheckError",
    "SoundnessViolation",
]

import typing as tp

if tp.TYPE_CHECKING:
    from qratio.poly import Poly


class QRatioError(Exception):
    pass


class QRatioInputError(QRatioError, ValueError):
    pass


class DegreeTooSmall(QRatioInputError):
    pass


class InvalidScale(QRatioInputError):
    pass


class DegreeDrop(QRatioInputError):
    """Raised by `reverse` when the constant term is zero. The (lower degree) reversed polynomial is still built and
    attached as `result`."""

    def __init__(self, message: str, result: Poly):
        super().__init__(message)
        self.result = result


class InvalidQSequence(QRatioInputError):
    pass


class ZeroPolynomial(QRatioInputError):
    pass


class PolyParseError(QRatioInputError):

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"Line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class BadInterval(QRatioInputError):
    pass


class BadParams(QRatioInputError):
    pass


class BadInput(QRatioInputError):
    pass


class BadSpec(QRatioInputError):
    pass


class NotApplicableError(QRatioError):
    """A hypothesis of the requested test or evaluator does not hold for the given polynomial."""


class ConjectureCheckError(QRatioError):
    """The counterexample tower failed to violate a conjecture it is known to violate."""


class SoundnessViolation(QRatioError):
    """A fired certificate contradicts the Sturm oracle. This is always a logic error."""
