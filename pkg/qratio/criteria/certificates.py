from __future__ import annotations

__all__ = ["Witness", "BoundCertificate", "CertifiedConstant"]

import operator
import typing as tp
from dataclasses import dataclass, field
from fractions import Fraction

from qratio.enums import Criterion, Direction
from qratio.utilities import fraction_str

_RELATIONS: dict[str, tp.Callable[[Fraction, Fraction], bool]] = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
    "==": operator.eq,
}


@dataclass(frozen=True, slots=True)
class Witness:
    """An exact inequality `lhs relation rhs` that held when the certificate was built."""

    label: str
    index: int | None
    lhs: Fraction
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"Unknown witness relation: {self.relation}")

    def holds(self) -> bool:
        return _RELATIONS[self.relation](self.lhs, self.rhs)

    def __str__(self):
        return f"{self.label} = {self.lhs} {self.relation} {self.rhs}"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "index": self.index,
            "lhs": fraction_str(self.lhs),
            "relation": self.relation,
            "rhs": fraction_str(self.rhs),
        }


@dataclass(frozen=True, slots=True)
class BoundCertificate:
    """Outcome of one coefficient-ratio criterion on one polynomial.

    `direction` names what the criterion concludes when it fires; `bound` is only set on fired certificates.
    Not-applicable certificates carry a `reason` and nothing else. A non-`certifying` certificate reports a claim with
    known counterexamples: it never narrows the root count range and the oracle may refute it.
    """

    criterion: Criterion
    degree: int
    applicable: bool
    fired: bool = False
    direction: Direction | None = None
    bound: int | None = None
    witnesses: tuple[Witness, ...] = ()
    reason: str = ""
    indeterminate: bool = False
    margin: Fraction | None = None
    params: dict[str, int] = field(default_factory=dict)
    certifying: bool = True

    @classmethod
    def not_applicable(
        cls, criterion: Criterion, degree: int, reason: str, params: dict[str, int] | None = None
    ) -> BoundCertificate:
        return cls(criterion, degree, applicable=False, reason=reason, params=params or {})

    @property
    def violated(self) -> bool:
        """A sum check whose margin came out negative."""
        return self.margin is not None and self.margin < 0

    def claimed_interval(self) -> tuple[int, int]:
        """Closed range of real root counts (with multiplicity) the criterion claims, certifying or not."""
        n = self.degree
        if not (self.applicable and self.fired):
            return 0, n
        match self.direction:
            case Direction.UpperBound:
                return 0, self.bound
            case Direction.LowerBound:
                return self.bound, n
            case Direction.RealRootedness:
                return n, n
            case Direction.Positivity:
                return 0, 0
            case Direction.NecessaryFailed:
                return 0, n - 2
            case Direction.ExactCount:
                return self.bound, self.bound
            case _:
                # Sum bounds constrain q-values, not the root count.
                return 0, n

    def root_count_interval(self) -> tuple[int, int]:
        """Closed range of real root counts this certificate proves. Only certifying certificates narrow it."""
        if not self.certifying:
            return 0, self.degree
        return self.claimed_interval()

    def consistent_with(self, actual_roots: int) -> bool:
        lo, hi = self.root_count_interval()
        return lo <= actual_roots <= hi

    def refuted_by(self, actual_roots: int) -> bool:
        """A non-certifying claim that the oracle count falls outside of."""
        if self.certifying:
            return False
        lo, hi = self.claimed_interval()
        return not lo <= actual_roots <= hi

    def to_json(self) -> dict:
        return {
            "criterion": str(self.criterion),
            "direction": None if self.direction is None else str(self.direction),
            "fired": self.fired,
            "bound": self.bound,
            "witnesses": [w.to_json() for w in self.witnesses],
            "applicable": self.applicable,
            "reason": self.reason,
            "indeterminate": self.indeterminate,
            "margin": None if self.margin is None else fraction_str(self.margin),
            "params": dict(self.params),
            "certifying": self.certifying,
            "violated": self.violated,
        }


@dataclass(frozen=True, slots=True)
class CertifiedConstant:
    """Rational enclosure `lower <= target <= upper` of a transcendental threshold."""

    lower: Fraction
    upper: Fraction
    target: str
    precision_bits: int

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def scaled(self, factor: Fraction, target: str = "") -> CertifiedConstant:
        """Enclosure of `factor * target` for a positive rational `factor`."""
        if factor <= 0:
            raise ValueError("Enclosures can only be scaled by positive factors.")
        return CertifiedConstant(
            self.lower * factor, self.upper * factor, target or f"{factor} * {self.target}", self.precision_bits
        )

    def strictly_above(self, value: Fraction) -> bool | None:
        """Decide `value < target`: True if `value < lower`, False if `value >= upper`, None inside the gap."""
        if value < self.lower:
            return True
        if value >= self.upper:
            return False
        return None

    def to_json(self) -> dict:
        return {
            "lower": fraction_str(self.lower),
            "upper": fraction_str(self.upper),
            "target": self.target,
            "precision_bits": self.precision_bits,
        }
