"""Operations behind each command line subcommand, returning report objects that render as JSON or text.

Rendering is deterministic: identical inputs and seeds give byte-identical output.
"""
from __future__ import annotations

__all__ = [
    "OutputFormat",
    "AnalysisReport",
    "OracleResult",
    "ConjectureSweep",
    "ConeCheckResult",
    "cmd_analyze",
    "cmd_oracle",
    "cmd_gen",
    "cmd_verify_conjecture",
    "cmd_cone_check",
    "cmd_cone_sample",
    "resolve_cone_spec",
    "render",
]

import json
import logging
import typing as tp
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from pathlib import Path

from .config import DEFAULT_PRECISION_BITS, QRatioConfig, resolve_workers
from .conjectures import ConjectureReport, conj1_bound, conj2_bound, conj3_bound, verify_counterexamples
from .constructions import FamilySpec
from .criteria import (
    AnyaPoint,
    BoundCertificate,
    combine_bounds,
    find_contradictions,
    find_refuted_claims,
    prop_anya_points,
    run_all_criteria,
)
from .enums import Conjecture
from .exceptions import BadParams, BadSpec, DegreeTooSmall, NotApplicableError, SoundnessViolation
from .logmap import (
    ConeSampleSummary,
    ConeSpec,
    cone_membership,
    hutchinson_cone,
    log_image,
    newton_cone,
    sample_cone_vs_strata,
    theorem_a_cone,
    theorem_b_cone,
)
from .oracle import RootReport, count_real_roots
from .poly import Poly, format_poly_text, is_all_positive, positivity_class, q_sequence, read_poly
from .utilities import fraction_list

_LOGGER = logging.getLogger("qratio")


class OutputFormat(StrEnum):
    JSON = "json"
    Text = "text"


# region Analyze

@dataclass(frozen=True, slots=True)
class AnalysisReport:
    source: str
    polynomial: Poly
    oracle: RootReport
    certificates: list[BoundCertificate]
    combined_interval: tuple[int, int]
    anya_points: list[AnyaPoint] = field(default_factory=list)
    conjectures: list[ConjectureReport] = field(default_factory=list)

    @property
    def refuted_claims(self) -> list[BoundCertificate]:
        return find_refuted_claims(self.certificates, self.oracle.total_with_multiplicity)

    @property
    def agreement(self) -> bool:
        lower, upper = self.combined_interval
        return lower <= self.oracle.total_with_multiplicity <= upper

    @property
    def fired(self) -> list[BoundCertificate]:
        return [c for c in self.certificates if c.applicable and c.fired]

    def to_json(self) -> dict:
        p = self.polynomial
        return {
            "input": {"source": self.source, "degree": p.degree, "coefficients": fraction_list(p.coeffs)},
            "q_sequence": q_sequence(p).to_json(),
            "positivity": str(positivity_class(p)),
            "oracle": self.oracle.to_json(),
            "certificates": [c.to_json() for c in self.certificates],
            "anya_points": [point.to_json() for point in self.anya_points],
            "combined_interval": list(self.combined_interval),
            "agreement": self.agreement,
            "refuted_claims": [str(c.criterion) for c in self.refuted_claims],
            "conjectures": [r.to_json() for r in self.conjectures],
        }

    def to_text(self) -> str:
        p = self.polynomial
        q = q_sequence(p)
        lines = [
            f"Polynomial: {p}  (degree {p.degree}, {positivity_class(p)})",
            f"Source: {self.source}",
            "q-sequence: " + ", ".join(f"q_{k} = {v}" for k, v in sorted(q.entries.items())),
            f"Real roots (oracle): {self.oracle.total_with_multiplicity} "
            f"({self.oracle.distinct_count} distinct)",
            "Fired certificates:",
        ]
        for certificate in self.fired:
            params = "".join(f" {k}={v}" for k, v in certificate.params.items())
            bound = "" if certificate.bound is None else f" {certificate.bound}"
            claim = "" if certificate.certifying else " (claim only)"
            lines.append(f"  {certificate.criterion}{params}: {certificate.direction}{bound}{claim}")
        if not self.fired:
            lines.append("  (none)")
        indeterminate = [c for c in self.certificates if c.indeterminate]
        for certificate in indeterminate:
            lines.append(f"  {certificate.criterion}: indeterminate ({certificate.reason})")
        lower, upper = self.combined_interval
        lines.append(f"Combined interval: [{lower}, {upper}]  agreement: {'yes' if self.agreement else 'NO'}")
        for certificate in self.refuted_claims:
            lines.append(f"Refuted by the oracle: {certificate.criterion} {certificate.direction} {certificate.bound}")
        for report in self.conjectures:
            verdict = "VIOLATED" if report.violated else "holds"
            lines.append(
                f"{report.conjecture}: predicted {report.predicted_bound}, actual {report.actual_roots} ({verdict})"
            )
        return "\n".join(lines)


def cmd_analyze(path: Path | str, config: QRatioConfig = QRatioConfig()) -> AnalysisReport:
    """Run every criterion, the oracle, and (for positive input) the conjecture evaluators on one polynomial file.

    Raises `SoundnessViolation` if any fired, certifying certificate disagrees with the oracle.
    """
    p = read_poly(path)
    if p.degree < 2:
        raise DegreeTooSmall(f"analyze needs degree >= 2, got degree {p.degree}.")
    certificates = run_all_criteria(p, config.precision_bits)
    oracle = count_real_roots(p)
    actual = oracle.total_with_multiplicity

    contradictions = find_contradictions(certificates, actual)
    if contradictions:
        for certificate in contradictions:
            _LOGGER.error(
                f"{certificate.criterion} claims {certificate.direction} {certificate.bound} on {path}, "
                f"but the oracle counts {actual} real roots."
            )
        raise SoundnessViolation(
            f"{len(contradictions)} certificate(s) contradict the oracle: "
            f"{[str(c.criterion) for c in contradictions]}"
        )
    for certificate in find_refuted_claims(certificates, actual):
        _LOGGER.warning(
            f"{certificate.criterion} claims {certificate.direction} {certificate.bound} on {path}, refuted by the "
            f"oracle count of {actual}."
        )

    try:
        anya_points = prop_anya_points(p, config.precision_bits)
    except NotApplicableError:
        anya_points = []

    conjectures = []
    if is_all_positive(p):
        conjectures = [
            conj1_bound(p, actual_roots=actual),
            conj2_bound(p, actual_roots=actual),
            conj3_bound(p, actual_roots=actual),
        ]
    report = AnalysisReport(
        str(path), p, oracle, certificates, combine_bounds(certificates, p.degree), anya_points, conjectures
    )
    _LOGGER.info(f"Analyzed {path}: {actual} real roots, combined interval {report.combined_interval}.")
    return report

# endregion


# region Oracle / generators

@dataclass(frozen=True, slots=True)
class OracleResult:
    source: str
    polynomial: Poly
    report: RootReport

    def to_json(self) -> dict:
        return {"source": self.source, "coefficients": fraction_list(self.polynomial.coeffs), **self.report.to_json()}

    def to_text(self) -> str:
        lines = [
            f"Polynomial: {self.polynomial}",
            f"Real roots: {self.report.total_with_multiplicity} ({self.report.distinct_count} distinct)",
        ]
        for interval in self.report.isolating_intervals or ():
            where = f"x = {interval.lo}" if interval.is_exact else f"x in ({interval.lo}, {interval.hi}]"
            lines.append(f"  {where}  multiplicity {interval.multiplicity}")
        return "\n".join(lines)


def cmd_oracle(path: Path | str, max_width: Fraction | None = None) -> OracleResult:
    """Exact real root count with isolating intervals, optionally refined to `max_width`."""
    p = read_poly(path)
    report = count_real_roots(p, isolate=True)
    if max_width is not None:
        if max_width <= 0:
            raise BadParams(f"Isolation width must be positive, got {max_width}.")
        report = RootReport(
            report.degree,
            report.total_with_multiplicity,
            report.distinct_count,
            report.square_free_factors,
            [interval.refine(max_width) for interval in report.isolating_intervals],
        )
    return OracleResult(str(path), p, report)


def cmd_gen(family: str, output: Path | str | None = None, **params: int | None) -> str:
    """Polynomial text for one member of a named family. Written to `output` if given, and always returned."""
    spec = FamilySpec.from_args(family, **params)
    text = format_poly_text(spec.generate())
    _LOGGER.info(f"Generated {spec.describe()}.")
    if output is not None:
        Path(output).write_text(text, encoding="utf-8")
    return text

# endregion


# region Conjectures

@dataclass(frozen=True, slots=True)
class ConjectureSweep:
    conjecture: Conjecture
    n_max: int
    reports: list[ConjectureReport]

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.reports]

    def to_text(self) -> str:
        lines = [f"{self.conjecture} on Q_15..Q_{self.n_max}:"]
        for r in self.reports:
            verdict = "VIOLATED" if r.violated else "holds"
            lines.append(f"  {r.label:>6}: predicted {r.predicted_bound:>3}, actual {r.actual_roots:>3}  {verdict}")
        return "\n".join(lines)


def cmd_verify_conjecture(conjecture_id: int, n_max: int, workers: int = 1) -> ConjectureSweep:
    try:
        conjecture = Conjecture.from_id(conjecture_id)
    except ValueError as ex:
        raise BadParams(str(ex))
    reports = verify_counterexamples(
        n_max, workers=resolve_workers(workers), include_tropical=conjecture == Conjecture.TropicalC1
    )
    return ConjectureSweep(conjecture, n_max, [r for r in reports if r.conjecture == conjecture])

# endregion


# region Cones

_NAMED_CONES: dict[str, tp.Callable[..., ConeSpec]] = {
    "hutchinson": lambda n, bits: hutchinson_cone(n),
    "newton": lambda n, bits: newton_cone(n),
    "theorem-a": theorem_a_cone,
    "theorem-b": theorem_b_cone,
}


def resolve_cone_spec(spec: str, n: int | None = None, precision_bits: int = DEFAULT_PRECISION_BITS) -> ConeSpec:
    """A cone spec JSON path, or one of the named cones (`hutchinson`, `newton`, `theorem-a`, `theorem-b`) at degree
    `n`. When both a file and `n` are given, they must agree."""
    if spec in _NAMED_CONES:
        if n is None:
            raise BadParams(f"Named cone {spec!r} needs a degree (--n).")
        return _NAMED_CONES[spec](n, precision_bits)
    cone = ConeSpec.from_path(spec)
    if n is not None and cone.degree != n:
        raise BadSpec(f"Cone spec {spec} describes degree {cone.degree}, not {n}.")
    return cone


@dataclass(frozen=True, slots=True)
class ConeCheckResult:
    spec: ConeSpec
    polynomial: Poly
    member: bool

    def to_json(self) -> dict:
        return {"spec": self.spec.to_json(), "member": self.member, **log_image(self.polynomial).to_json()}

    def to_text(self) -> str:
        q = q_sequence(self.polynomial).values()
        checks = ", ".join(
            f"q_{j} = {value} {sign} {eps}"
            for j, (value, sign, eps) in enumerate(zip(q, self.spec.sigma, self.spec.epsilon), start=1)
        )
        strictness = " (non-strict)" if self.spec.non_strict else ""
        return f"{'member' if self.member else 'not a member'}{strictness}: {checks}"


def cmd_cone_check(spec: str, path: Path | str, config: QRatioConfig = QRatioConfig()) -> ConeCheckResult:
    p = read_poly(path)
    cone = resolve_cone_spec(spec, p.degree if spec in _NAMED_CONES else None, config.precision_bits)
    return ConeCheckResult(cone, p, cone_membership(p, cone))


def cmd_cone_sample(
    spec: str, n: int | None, count: int, seed: int, config: QRatioConfig = QRatioConfig()
) -> ConeSampleSummary:
    cone = resolve_cone_spec(spec, n, config.precision_bits)
    return sample_cone_vs_strata(
        cone,
        count,
        seed,
        box_ratio=config.sample_box_ratio,
        denominator=config.sample_denominator,
        workers=resolve_workers(config.workers),
    )

# endregion


def _summary_text(summary: ConeSampleSummary) -> str:
    lines = [f"Cone sample: degree {summary.degree}, {summary.samples} samples, seed {summary.seed}"]
    for roots, count in summary.histogram.items():
        lines.append(f"  {roots:>3} real roots: {count}")
    return "\n".join(lines)


def render(result: tp.Any, output_format: OutputFormat | str = OutputFormat.JSON) -> str:
    """JSON (indented, exact rationals as strings) or a short human-readable summary."""
    if OutputFormat(output_format) == OutputFormat.JSON:
        return json.dumps(result.to_json(), indent=2)
    if isinstance(result, ConeSampleSummary):
        return _summary_text(result)
    return result.to_text()
