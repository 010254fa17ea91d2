from .cones import (
    ConeSpec,
    cone_membership,
    coordinate_holds,
    hutchinson_cone,
    newton_cone,
    theorem_a_cone,
    theorem_b_cone,
)
from .coordinates import LogPoint, log_image, normalize_hat, is_normalized, kappa_matrix, kappa_matrix_determinant
from .sampling import ConeSampleSummary, draw_q_vector, sample_cone_vs_strata
