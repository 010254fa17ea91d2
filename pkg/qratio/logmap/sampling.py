"""Empirical check of where a cone sits relative to the root-count strata.

Sample `i` is drawn from its own generator `default_rng([seed, i])`, so the summary does not depend on how samples are
split over worker processes. This is evidence only; nothing here proves containment.
"""
from __future__ import annotations

__all__ = ["ConeSampleSummary", "draw_q_vector", "sample_cone_vs_strata"]

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from qratio.config import DEFAULT_SAMPLE_BOX_RATIO, DEFAULT_SAMPLE_DENOMINATOR
from qratio.enums import ConeSign
from qratio.exceptions import BadParams
from qratio.oracle import count_real_roots
from qratio.poly import coeffs_from_q

from .cones import ConeSpec, coordinate_holds

_LOGGER = logging.getLogger("qratio")

# Per-coordinate redraws before falling back to a nudged threshold.
_MAX_REDRAWS = 64


@dataclass(frozen=True, slots=True)
class ConeSampleSummary:
    spec: ConeSpec
    degree: int
    samples: int
    seed: int
    histogram: dict[int, int]
    box_ratio: Fraction
    denominator: int

    @property
    def real_rooted_fraction(self) -> float:
        return self.histogram.get(self.degree, 0) / self.samples if self.samples else 0.0

    @property
    def observed_counts(self) -> list[int]:
        return sorted(self.histogram)

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "degree": self.degree,
            "samples": self.samples,
            "seed": self.seed,
            "box_ratio": str(self.box_ratio),
            "denominator": self.denominator,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "real_rooted_fraction_float": self.real_rooted_fraction,
        }


def _draw_coordinate(
    rng: np.random.Generator, sign: ConeSign, eps: Fraction, non_strict: bool, log_ratio: float, denominator: int
) -> Fraction:
    """Log-uniform draw on `(eps, eps R]`, `[eps/R, eps)` or `[1/R, R]`, rounded to a small rational.

    Rounding can push a value across `eps`; such draws are repeated, then `eps` nudged inward is used.
    """
    for _ in range(_MAX_REDRAWS):
        u = rng.uniform(0.0, 1.0)
        match sign:
            case ConeSign.Greater:
                value = float(eps) * np.exp(u * log_ratio)
            case ConeSign.Less:
                value = float(eps) * np.exp(-u * log_ratio)
            case _:
                value = float(np.exp((2 * u - 1) * log_ratio))
        candidate = Fraction(value).limit_denominator(denominator)
        if candidate > 0 and coordinate_holds(candidate, sign, eps, non_strict):
            return candidate
    step = Fraction(1, denominator)
    if sign == ConeSign.Greater:
        return eps + step
    return eps * denominator / (denominator + 1)


def draw_q_vector(spec: ConeSpec, seed: int, index: int, box_ratio: Fraction, denominator: int) -> list[Fraction]:
    rng = np.random.default_rng([seed, index])
    log_ratio = float(np.log(float(box_ratio)))
    return [
        _draw_coordinate(rng, sign, eps, spec.non_strict, log_ratio, denominator)
        for sign, eps in zip(spec.sigma, spec.epsilon)
    ]


def _count_chunk(args: tuple[ConeSpec, int, range, Fraction, int]) -> Counter:
    spec, seed, indices, box_ratio, denominator = args
    counts = Counter()
    for i in indices:
        q = draw_q_vector(spec, seed, i, box_ratio, denominator)
        p = coeffs_from_q(1, 1, q)
        counts[count_real_roots(p, isolate=False).total_with_multiplicity] += 1
    return counts


def sample_cone_vs_strata(
    spec: ConeSpec,
    samples: int,
    seed: int,
    box_ratio: Fraction = DEFAULT_SAMPLE_BOX_RATIO,
    denominator: int = DEFAULT_SAMPLE_DENOMINATOR,
    workers: int = 1,
) -> ConeSampleSummary:
    """Draw `samples` q-vectors inside `spec`, rebuild each as `coeffs_from_q(1, 1, q)`, and histogram the exact
    real-root counts. The degree is `spec.degree`."""
    if seed < 0:
        raise BadParams(f"Seed must be non-negative, got {seed}.")
    if samples < 0:
        raise BadParams(f"Sample count must be non-negative, got {samples}.")
    if box_ratio <= 1:
        raise BadParams(f"Sampling box ratio must exceed 1, got {box_ratio}.")
    if denominator < 1:
        raise BadParams(f"Sampling denominator must be positive, got {denominator}.")

    workers = max(1, min(workers, samples))
    chunk = -(-samples // workers) if samples else 0
    jobs = [
        (spec, seed, range(start, min(start + chunk, samples)), box_ratio, denominator)
        for start in range(0, samples, chunk or 1)
    ]
    _LOGGER.debug(f"Sampling {samples} points of a degree {spec.degree} cone over {len(jobs)} job(s).")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            partials = list(executor.map(_count_chunk, jobs))
    else:
        partials = [_count_chunk(job) for job in jobs]

    histogram = Counter()
    for partial in partials:
        histogram.update(partial)
    summary = ConeSampleSummary(
        spec, spec.degree, samples, seed, dict(sorted(histogram.items())), Fraction(box_ratio), denominator
    )
    _LOGGER.info(f"Cone sample (n={spec.degree}, {samples} samples, seed {seed}): {summary.to_json()['histogram']}")
    return summary
