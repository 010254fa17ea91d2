from .alternation import (
    AnyaPoint,
    prop_anya_points,
    prop_anya_certificate,
    cor_anya_lower_bound,
    sqrt_enclosure,
    sign_at_negative_sqrt,
)
from .certificates import Witness, BoundCertificate, CertifiedConstant
from .classical import hutchinson_test, newton_necessary, newton_threshold, HUTCHINSON_THRESHOLD
from .combined import run_all_criteria, combine_bounds, find_contradictions, find_refuted_claims
from .constants import certified_inv_cos_sq
from .sums import (
    theorem1_bound,
    corollary1_bound,
    corollary2_bounds,
    theorem1_sum_test,
    corollary1_test,
    corollary2_test,
    corollary2_sweep,
    corollary2_reduction,
    legal_corollary2_params,
    FactoredForm,
    theorem3_bound,
    theorem4_bound,
    theorem3_4_sum_check,
)
from .trigonometric import (
    theorem_A_test,
    theorem_B_test,
    theorem_D_test,
    theorem_E_test,
    theorem_F_test,
    odd_index_thresholds,
    even_index_thresholds,
)
