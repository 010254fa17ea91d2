"""Sign/threshold cones in `kappa` coordinates, decided exactly on the rational `q_j`.

`kappa_j <sigma_j> log eps_j` is the same statement as `q_j <sigma_j> eps_j`, so nothing here takes a logarithm.
"""
from __future__ import annotations

__all__ = [
    "ConeSpec",
    "cone_membership",
    "coordinate_holds",
    "hutchinson_cone",
    "newton_cone",
    "theorem_a_cone",
    "theorem_b_cone",
]

import json
import logging
import typing as tp
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from qratio.config import DEFAULT_PRECISION_BITS
from qratio.criteria import (
    HUTCHINSON_THRESHOLD,
    even_index_thresholds,
    newton_threshold,
    odd_index_thresholds,
)
from qratio.enums import ConeSign
from qratio.exceptions import BadParams, BadSpec, NotApplicableError
from qratio.poly import Poly, is_all_positive, q_sequence
from qratio.utilities import RationalLike, fraction_list, to_fraction

_LOGGER = logging.getLogger("qratio")


@dataclass(frozen=True, slots=True)
class ConeSpec:
    """One sign and one positive threshold per coordinate `j = 1..n-1`.

    Signs are strict. `non_strict` turns every `<`/`>` into `<=`/`>=` and exists for boundary cones such as
    Hutchinson's. A `*` coordinate is unconstrained (its threshold is kept but never consulted).
    """

    sigma: tuple[ConeSign, ...]
    epsilon: tuple[Fraction, ...]
    non_strict: bool = False

    def __post_init__(self):
        if len(self.sigma) != len(self.epsilon):
            raise BadSpec(f"sigma has {len(self.sigma)} entries but epsilon has {len(self.epsilon)}.")
        if not self.sigma:
            raise BadSpec("Cone must have at least one coordinate.")
        bad = [j + 1 for j, eps in enumerate(self.epsilon) if eps <= 0]
        if bad:
            raise BadSpec(f"epsilon must be positive; offending coordinates: {bad}")

    @classmethod
    def build(
        cls, sigma: tp.Iterable[str | ConeSign], epsilon: tp.Iterable[RationalLike], non_strict: bool = False
    ) -> ConeSpec:
        try:
            signs = tuple(ConeSign(s) for s in sigma)
        except ValueError as ex:
            raise BadSpec(f"Invalid cone sign: {ex}")
        try:
            thresholds = tuple(to_fraction(e) for e in epsilon)
        except (TypeError, ValueError, ZeroDivisionError) as ex:
            raise BadSpec(f"Invalid cone threshold: {ex}")
        return cls(signs, thresholds, non_strict)

    @property
    def dimension(self) -> int:
        return len(self.sigma)

    @property
    def degree(self) -> int:
        return len(self.sigma) + 1

    @classmethod
    def from_json(cls, data: dict) -> ConeSpec:
        if not isinstance(data, dict) or "sigma" not in data or "epsilon" not in data:
            raise BadSpec("Cone spec must be a JSON object with 'sigma' and 'epsilon' lists.")
        if not isinstance(data["sigma"], list) or not isinstance(data["epsilon"], list):
            raise BadSpec("Cone spec 'sigma' and 'epsilon' must be lists.")
        if any(isinstance(e, float) for e in data["epsilon"]):
            raise BadSpec("Cone thresholds must be integers or 'p/q' strings, not floats.")
        return cls.build(data["sigma"], data["epsilon"], bool(data.get("non_strict", False)))

    @classmethod
    def from_path(cls, path: Path | str) -> ConeSpec:
        path = Path(path)
        try:
            with path.open("r", encoding="utf-8") as f:
                data = json.load(f)
        except FileNotFoundError:
            raise BadSpec(f"Cone spec file does not exist: {path}")
        except json.JSONDecodeError as ex:
            _LOGGER.error(ex)
            raise BadSpec(f"Could not interpret cone spec file '{path}'. (See log for full JSON error.)")
        return cls.from_json(data)

    def to_json(self) -> dict:
        data = {"sigma": [str(s) for s in self.sigma], "epsilon": fraction_list(self.epsilon)}
        if self.non_strict:
            data["non_strict"] = True
        return data


def coordinate_holds(value: Fraction, sign: ConeSign, threshold: Fraction, non_strict: bool = False) -> bool:
    match sign:
        case ConeSign.Free:
            return True
        case ConeSign.Less:
            return value <= threshold if non_strict else value < threshold
        case ConeSign.Greater:
            return value >= threshold if non_strict else value > threshold
    raise ValueError(f"Unknown cone sign: {sign}")


def cone_membership(p: Poly, spec: ConeSpec) -> bool:
    """True iff `q_j <sigma_j> eps_j` for every coordinate. `q` is invariant under the normalizing scale, so any
    polynomial with positive coefficients may be passed."""
    if p.degree != spec.degree:
        raise BadSpec(f"Cone has {spec.dimension} coordinates but polynomial degree {p.degree} has {p.degree - 1}.")
    if not is_all_positive(p):
        raise NotApplicableError("Cone membership needs all coefficients positive.")
    q = q_sequence(p)
    return all(
        coordinate_holds(q[j], sign, eps, spec.non_strict)
        for j, (sign, eps) in enumerate(zip(spec.sigma, spec.epsilon), start=1)
    )


# region Named cones

def _check_degree(n: int, minimum: int = 2):
    if n < minimum:
        raise BadParams(f"Cone needs degree n >= {minimum}, got {n}.")


def hutchinson_cone(n: int) -> ConeSpec:
    """`q_j >= 4` everywhere: contained in the real-rooted stratum."""
    _check_degree(n)
    return ConeSpec((ConeSign.Greater,) * (n - 1), (Fraction(HUTCHINSON_THRESHOLD),) * (n - 1), non_strict=True)


def newton_cone(n: int, index: int | None = None) -> ConeSpec:
    """Newton's inequality violated at `index` (or at every index when `None`): no member is real-rooted."""
    _check_degree(n)
    if index is not None and not 1 <= index <= n - 1:
        raise BadParams(f"Newton cone index must lie in 1..{n - 1}, got {index}.")
    sigma = tuple(
        ConeSign.Less if index is None or j == index else ConeSign.Free for j in range(1, n)
    )
    return ConeSpec(sigma, tuple(newton_threshold(n, j) for j in range(1, n)))


def theorem_a_cone(n: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> ConeSpec:
    """Even `n`: odd-index `q` below `1/cos^2(pi/(n/2+2))`, even-index free. Members have no real roots.

    Certified lower enclosures are used as thresholds, so the cone sits inside the exact one.
    """
    _check_degree(n)
    if n % 2:
        raise BadParams(f"Theorem A cone needs even degree, got {n}.")
    sigma = [ConeSign.Free] * (n - 1)
    epsilon = [Fraction(1)] * (n - 1)
    for k, constant in odd_index_thresholds(n, precision_bits):
        sigma[k - 1] = ConeSign.Less
        epsilon[k - 1] = constant.lower
    return ConeSpec(tuple(sigma), tuple(epsilon))


def theorem_b_cone(n: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> ConeSpec:
    """Odd `n`: even-index `q_{2k}` below their scaled thresholds, odd-index free.

    Members have exactly one real root.
    """
    _check_degree(n, 3)
    if n % 2 == 0:
        raise BadParams(f"Theorem B cone needs odd degree, got {n}.")
    sigma = [ConeSign.Free] * (n - 1)
    epsilon = [Fraction(1)] * (n - 1)
    for k, constant in even_index_thresholds(n, precision_bits):
        sigma[k - 1] = ConeSign.Less
        epsilon[k - 1] = constant.lower
    return ConeSpec(tuple(sigma), tuple(epsilon))

# endregion
