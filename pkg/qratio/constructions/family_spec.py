from __future__ import annotations

__all__ = ["FamilySpec"]

from dataclasses import dataclass, field

from qratio.enums import Family
from qratio.exceptions import BadParams
from qratio.poly import Poly

from .families import hutchinson_extremal, sharp_pr1, sharp_thm2, stratum_representative
from .tower import TOWER_BASE, counterexample_Q

# Parameter names each family takes, in call order.
_FAMILY_PARAMS = {
    Family.SharpThm2: ("n",),
    Family.SharpPr1: ("n", "m", "j"),
    Family.CounterexampleQ: ("n",),
    Family.HutchinsonExtremal: ("n",),
    Family.Stratum: ("n", "l"),
}


@dataclass(frozen=True, slots=True)
class FamilySpec:
    family: Family
    params: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        expected = _FAMILY_PARAMS[self.family]
        missing = [name for name in expected if self.params.get(name) is None]
        if missing:
            raise BadParams(f"Family {self.family} needs parameters {list(expected)}; missing {missing}.")
        extra = sorted(set(self.params) - set(expected))
        if extra:
            raise BadParams(f"Family {self.family} does not take parameters {extra}.")
        n = self.params["n"]
        match self.family:
            case Family.SharpThm2 if n < 4:
                raise BadParams(f"{self.family} needs n >= 4, got {n}.")
            case Family.SharpPr1:
                m, j = self.params["m"], self.params["j"]
                if n < 4 or not 2 <= m <= n - 2 or not 1 <= j <= n - m - 1:
                    raise BadParams(f"{self.family} needs n >= 4, 2 <= m <= n-2, 1 <= j <= n-m-1.")
            case Family.CounterexampleQ if n < TOWER_BASE:
                raise BadParams(f"{self.family} needs n >= {TOWER_BASE}, got {n}.")

    @classmethod
    def from_args(cls, family: str | Family, **params: int | None) -> FamilySpec:
        """Build from loosely specified keyword arguments (e.g. command line flags), dropping `None` values."""
        try:
            family = Family(family)
        except ValueError:
            raise BadParams(f"Unknown family {family!r}. Choose from: {[str(f) for f in Family]}")
        return cls(family, {k: v for k, v in params.items() if v is not None})

    def generate(self) -> Poly:
        p = self.params
        match self.family:
            case Family.SharpThm2:
                return sharp_thm2(p["n"])
            case Family.SharpPr1:
                return sharp_pr1(p["n"], p["m"], p["j"])
            case Family.CounterexampleQ:
                return counterexample_Q(p["n"])
            case Family.HutchinsonExtremal:
                return hutchinson_extremal(p["n"])
            case Family.Stratum:
                return stratum_representative(p["n"], p["l"])
        raise BadParams(f"Unhandled family: {self.family}")

    def describe(self) -> str:
        return f"{self.family} " + " ".join(f"{k}={v}" for k, v in self.params.items())
