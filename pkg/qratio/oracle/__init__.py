from .roots import RootInterval, RootReport, cauchy_bound, count_real_roots, count_real_roots_with_known_root
from .squarefree import square_free_decompose, square_free_part
from .sturm import (
    sign,
    sign_changes,
    sturm_chain,
    variations_at,
    variations_at_infinity,
    count_in_interval,
)
