from .families import (
    sharp_thm2,
    sharp_thm2_q_value,
    base_pr1,
    integrate_preserving,
    sharp_pr1,
    hutchinson_extremal,
    stratum_representative,
    theorem2_factored_form,
)
from .family_spec import FamilySpec
from .tower import Q15_COEFFS, Q15_FACTORED, TOWER_BASE, counterexample_Q, q_tail_law
