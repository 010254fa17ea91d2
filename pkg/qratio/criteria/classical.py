from __future__ import annotations

__all__ = ["hutchinson_test", "newton_necessary", "newton_threshold", "HUTCHINSON_THRESHOLD"]

from fractions import Fraction

from qratio.enums import Criterion, Direction
from qratio.poly import Poly, is_all_positive, q_sequence

from .certificates import BoundCertificate, Witness

HUTCHINSON_THRESHOLD = Fraction(4)


def newton_threshold(n: int, k: int) -> Fraction:
    """Lower bound on `q_k` forced by real-rootedness in degree `n`."""
    return Fraction(k + 1, k) * Fraction(n - k + 1, n - k)


def hutchinson_test(p: Poly) -> BoundCertificate:
    """Fires (real-rootedness of `p` and of every segment) when `q_k >= 4` for all `k`."""
    n = p.degree
    if n < 2:
        return BoundCertificate.not_applicable(Criterion.HutchinsonH, n, "degree < 2 has no q-sequence")
    if not is_all_positive(p):
        return BoundCertificate.not_applicable(Criterion.HutchinsonH, n, "coefficients are not all positive")
    q = q_sequence(p)
    failing = [
        Witness(f"q_{k}", k, q[k], "<", HUTCHINSON_THRESHOLD) for k in range(1, n) if q[k] < HUTCHINSON_THRESHOLD
    ]
    if failing:
        return BoundCertificate(
            Criterion.HutchinsonH, n, True, fired=False, direction=Direction.RealRootedness, witnesses=tuple(failing)
        )
    return BoundCertificate(
        Criterion.HutchinsonH,
        n,
        True,
        fired=True,
        direction=Direction.RealRootedness,
        bound=n,
        witnesses=tuple(Witness(f"q_{k}", k, q[k], ">=", HUTCHINSON_THRESHOLD) for k in range(1, n)),
    )


def newton_necessary(p: Poly) -> BoundCertificate:
    """Fires (so `p` is NOT real-rooted) when some Newton inequality `q_k >= (k+1)/k * (n-k+1)/(n-k)` fails."""
    n = p.degree
    if n < 2:
        return BoundCertificate.not_applicable(Criterion.NewtonN, n, "degree < 2 has no q-sequence")
    if not is_all_positive(p):
        return BoundCertificate.not_applicable(Criterion.NewtonN, n, "coefficients are not all positive")
    q = q_sequence(p)
    failing = []
    holding = []
    for k in range(1, n):
        threshold = newton_threshold(n, k)
        if q[k] < threshold:
            failing.append(Witness(f"q_{k}", k, q[k], "<", threshold))
        else:
            holding.append(Witness(f"q_{k}", k, q[k], ">=", threshold))
    if failing:
        return BoundCertificate(
            Criterion.NewtonN,
            n,
            True,
            fired=True,
            direction=Direction.NecessaryFailed,
            bound=n - 2,
            witnesses=tuple(failing),
        )
    return BoundCertificate(
        Criterion.NewtonN, n, True, fired=False, direction=Direction.NecessaryFailed, witnesses=tuple(holding)
    )
