from .core import Poly, poly_gcd
from .qseq import QSeq, q_sequence, coeffs_from_q, positivity_class, is_all_positive
from .text import parse_poly_text, format_poly_text, read_poly, write_poly
from .transforms import (
    scale_transform,
    reverse,
    derivative,
    antiderivative_vanishing_at,
    eval_poly,
    segment,
    deflate,
)
