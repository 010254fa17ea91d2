from .counterexamples import verify_counterexamples, first_violation, tower_reports
from .evaluators import (
    ConjectureReport,
    parity_changes,
    conj2_coefficients,
    conj3_coefficients,
    conj1_bound,
    conj2_bound,
    conj3_bound,
    evaluate_conjecture,
)
from .tropical import weighted_points, upper_hull_indices, tropical_corner_count
