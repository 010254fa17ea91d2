from __future__ import annotations

__all__ = ["verify_counterexamples", "first_violation", "tower_reports"]

import logging
import typing as tp
from concurrent.futures import ProcessPoolExecutor

from qratio.constructions import TOWER_BASE, counterexample_Q
from qratio.enums import Conjecture
from qratio.exceptions import BadParams, ConjectureCheckError
from qratio.oracle import count_real_roots_with_known_root
from qratio.poly import Poly

from .evaluators import ConjectureReport, conj1_bound, conj2_bound, conj3_bound

_LOGGER = logging.getLogger("qratio")


def tower_reports(n: int, q_n: Poly, include_tropical: bool = False) -> list[ConjectureReport]:
    """Conjecture reports for one level `Q_n`. The root count comes from deflating at -1 first."""
    actual = count_real_roots_with_known_root(q_n, -1, isolate=False).total_with_multiplicity
    label = f"Q_{n}"
    reports = [
        conj2_bound(q_n, actual_roots=actual, label=label),
        conj3_bound(q_n, actual_roots=actual, label=label),
    ]
    if include_tropical:
        reports.insert(0, conj1_bound(q_n, actual_roots=actual, label=label))
    return reports


def _tower_reports_star(args: tuple[int, Poly, bool]) -> list[ConjectureReport]:
    return tower_reports(*args)


def first_violation(reports: tp.Iterable[ConjectureReport], conjecture: Conjecture) -> ConjectureReport | None:
    """Lowest-degree violated report for `conjecture`, if any."""
    violated = [r for r in reports if r.conjecture == conjecture and r.violated]
    return min(violated, key=lambda r: r.degree, default=None)


def verify_counterexamples(
    n_max: int, workers: int = 1, include_tropical: bool = False
) -> list[ConjectureReport]:
    """Run the Conjecture 2 and 3 evaluators on `Q_15 .. Q_{n_max}`.

    Every level must violate Conjecture 3; anything else raises `ConjectureCheckError`. The smallest level violating
    Conjecture 2 is logged. The tower itself is built sequentially; evaluation may then fan out over `workers`
    processes.
    """
    if n_max < TOWER_BASE:
        raise BadParams(f"n_max must be at least {TOWER_BASE}, got {n_max}.")
    levels = [(n, counterexample_Q(n), include_tropical) for n in range(TOWER_BASE, n_max + 1)]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            per_level = list(executor.map(_tower_reports_star, levels))
    else:
        per_level = [_tower_reports_star(level) for level in levels]
    reports = [report for level_reports in per_level for report in level_reports]

    for report in reports:
        if report.conjecture == Conjecture.LogConcaveC3 and not report.violated:
            raise ConjectureCheckError(
                f"{report.label} does not violate Conjecture 3 (predicted {report.predicted_bound}, "
                f"actual {report.actual_roots})."
            )
        if report.actual_roots != report.degree - 2:
            raise ConjectureCheckError(
                f"{report.label} has {report.actual_roots} real roots, expected {report.degree - 2}."
            )

    threshold = first_violation(reports, Conjecture.NewtonWeightedC2)
    if threshold is None:
        _LOGGER.info(f"No level up to Q_{n_max} violates Conjecture 2.")
    else:
        _LOGGER.info(f"Smallest level violating Conjecture 2: {threshold.label} (bound {threshold.predicted_bound}).")
    _LOGGER.info(f"Conjecture 3 violated at every level Q_{TOWER_BASE}..Q_{n_max}.")
    return reports
