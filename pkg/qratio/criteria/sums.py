"""Upper bounds on the real root count from the end ratios `q_1`, `q_{n-1}` (and the pair `q_j`, `q_{m+j}`), plus the
sum lower bounds satisfied by polynomials built from the quadratic factor forms."""
from __future__ import annotations

__all__ = [
    "theorem1_bound",
    "corollary1_bound",
    "corollary2_bounds",
    "theorem1_sum_test",
    "corollary1_test",
    "corollary2_test",
    "corollary2_sweep",
    "corollary2_reduction",
    "legal_corollary2_params",
    "FactoredForm",
    "theorem3_bound",
    "theorem4_bound",
    "theorem3_4_sum_check",
]

import logging
import typing as tp
from dataclasses import dataclass
from fractions import Fraction

from qratio.enums import Criterion, Direction
from qratio.exceptions import BadParams
from qratio.poly import Poly, is_all_positive, q_sequence, reverse
from qratio.utilities import RationalLike, fraction_str, to_fraction

from .certificates import BoundCertificate, Witness

_LOGGER = logging.getLogger("qratio")


def theorem1_bound(n: int) -> Fraction:
    return Fraction(4 * (n * n - 3 * n), (n - 2) ** 2)


def corollary1_bound(n: int) -> Fraction:
    return Fraction(2 * n * n - 6 * n, (n - 2) ** 2)


def corollary2_bounds(n: int, m: int, j: int) -> tuple[Fraction, Fraction]:
    """Thresholds for `q_j` and `q_{m+j}`."""
    base = Fraction((m - 1) * (m + 1), m * m)
    first = base * Fraction(n - j + 1, n - j) * Fraction(j + 1, j)
    second = base * Fraction(n - m - j + 1, n - m - j) * Fraction(m + j + 1, m + j)
    return first, second


def legal_corollary2_params(n: int) -> list[tuple[int, int]]:
    return [(m, j) for m in range(2, n - 1) for j in range(1, n - m)]


def _end_ratio_gate(p: Poly, criterion: Criterion) -> BoundCertificate | None:
    if p.degree < 4:
        return BoundCertificate.not_applicable(criterion, p.degree, f"degree {p.degree} < 4")
    if not is_all_positive(p):
        return BoundCertificate.not_applicable(criterion, p.degree, "coefficients are not all positive")
    return None


def theorem1_sum_test(p: Poly) -> BoundCertificate:
    """Claims at most `n-4` real roots when `q_1 + q_{n-1} < 4(n^2-3n)/(n-2)^2`.

    The claim is not a theorem: `1/5 + 2x + 6x^2 + 11/2 x^3 + 7/3 x^4 + 9/5 x^5` has `q_1 + q_4 = 3460/891 < 40/9` and
    three real roots, so the certificate is non-certifying.
    """
    if (gate := _end_ratio_gate(p, Criterion.Thm1)) is not None:
        return gate
    n = p.degree
    q = q_sequence(p)
    total = q[1] + q[n - 1]
    bound = theorem1_bound(n)
    label = f"q_1 + q_{n - 1}"
    if total < bound:
        return BoundCertificate(
            Criterion.Thm1,
            n,
            True,
            fired=True,
            direction=Direction.UpperBound,
            bound=n - 4,
            witnesses=(Witness(label, None, total, "<", bound),),
            certifying=False,
        )
    either = Witness(f"max(q_1, q_{n - 1})", None, max(q[1], q[n - 1]), ">=", bound / 2)
    return BoundCertificate(
        Criterion.Thm1,
        n,
        True,
        direction=Direction.UpperBound,
        witnesses=(Witness(label, None, total, ">=", bound), either),
        certifying=False,
    )


def corollary1_test(p: Poly) -> BoundCertificate:
    if (gate := _end_ratio_gate(p, Criterion.Cor1)) is not None:
        return gate
    n = p.degree
    q = q_sequence(p)
    bound = corollary1_bound(n)
    ends = (1, n - 1)
    if max(q[1], q[n - 1]) < bound:
        return BoundCertificate(
            Criterion.Cor1,
            n,
            True,
            fired=True,
            direction=Direction.UpperBound,
            bound=n - 4,
            witnesses=tuple(Witness(f"q_{k}", k, q[k], "<", bound) for k in ends),
        )
    return BoundCertificate(
        Criterion.Cor1,
        n,
        True,
        direction=Direction.UpperBound,
        witnesses=tuple(Witness(f"q_{k}", k, q[k], ">=", bound) for k in ends if q[k] >= bound),
    )


def _check_corollary2_params(n: int, m: int, j: int):
    if n < 4:
        raise BadParams(f"Corollary 2 needs degree >= 4, got {n}.")
    if not 2 <= m <= n - 2:
        raise BadParams(f"m must satisfy 2 <= m <= {n - 2}, got {m}.")
    if not 1 <= j <= n - m - 1:
        raise BadParams(f"j must satisfy 1 <= j <= {n - m - 1}, got {j}.")


def corollary2_test(p: Poly, m: int, j: int) -> BoundCertificate:
    """Both `q_j` and `q_{m+j}` below their thresholds gives at most `n-4` real roots."""
    n = p.degree
    _check_corollary2_params(n, m, j)
    params = {"m": m, "j": j}
    if not is_all_positive(p):
        return BoundCertificate.not_applicable(Criterion.Cor2, n, "coefficients are not all positive", params)
    q = q_sequence(p)
    first_bound, second_bound = corollary2_bounds(n, m, j)
    witnesses = []
    fired = True
    for k, bound in ((j, first_bound), (m + j, second_bound)):
        if q[k] < bound:
            witnesses.append(Witness(f"q_{k}", k, q[k], "<", bound))
        else:
            witnesses.append(Witness(f"q_{k}", k, q[k], ">=", bound))
            fired = False
    return BoundCertificate(
        Criterion.Cor2,
        n,
        True,
        fired=fired,
        direction=Direction.UpperBound,
        bound=n - 4 if fired else None,
        witnesses=tuple(witnesses),
        params=params,
    )


def corollary2_sweep(p: Poly) -> list[BoundCertificate]:
    """`corollary2_test` at every legal `(m, j)`."""
    return [corollary2_test(p, m, j) for m, j in legal_corollary2_params(p.degree)]


def corollary2_reduction(p: Poly, m: int, j: int) -> Poly:
    """Degree `m+2` polynomial whose `q_{m+1}` and `q_1` are `q_j(p)` and `q_{m+j}(p)` times explicit factors.

    Differentiate `j-1` times, reverse, then differentiate `n-m-j-1` times. Derivatives and reversal cannot lose more
    than the two non-real roots, and the rescaling factors turn the two pair thresholds into the single
    `corollary1_bound(m + 2)`, so `corollary2_test(p, m, j)` fires exactly when `corollary1_test` fires on the result.
    """
    n = p.degree
    _check_corollary2_params(n, m, j)
    result = p
    for _ in range(j - 1):
        result = result.derivative()
    result = reverse(result)
    for _ in range(n - m - j - 1):
        result = result.derivative()
    return result


@dataclass(frozen=True, slots=True)
class FactoredForm:
    """`prod_j (x^2 + 2 a_j x + b_j) * (x^2 + 2 t x + 1/(c prod_j b_j))`, times `(x + c)` when `c` is given (`c = 1`
    otherwise).

    With `N = len(pairs) + 1` quadratic factors, the expansion has degree `2N` (even form) or `2N + 1` (odd form).
    """

    pairs: tuple[tuple[Fraction, Fraction], ...]
    t: Fraction
    c: Fraction | None = None

    @classmethod
    def build(
        cls,
        pairs: tp.Iterable[tuple[RationalLike, RationalLike]],
        t: RationalLike,
        c: RationalLike | None = None,
    ) -> FactoredForm:
        return cls(
            tuple((to_fraction(a), to_fraction(b)) for a, b in pairs),
            to_fraction(t),
            None if c is None else to_fraction(c),
        )

    @property
    def is_odd(self) -> bool:
        return self.c is not None

    @property
    def quadratic_count(self) -> int:
        return len(self.pairs) + 1

    def special_factor(self) -> Poly:
        product_b = Fraction(1)
        for _, b in self.pairs:
            product_b *= b
        if self.is_odd:
            product_b *= self.c
        return Poly([1 / product_b, 2 * self.t, 1])

    def factors(self) -> list[Poly]:
        factors = [Poly([b, 2 * a, 1]) for a, b in self.pairs]
        factors.append(self.special_factor())
        if self.is_odd:
            factors.append(Poly([self.c, 1]))
        return factors

    def expand(self) -> Poly:
        return Poly.product(self.factors())

    def hypothesis_violations(self) -> list[str]:
        problems = []
        for index, (a, b) in enumerate(self.pairs, start=1):
            if a <= 0 or b <= 0:
                problems.append(f"pair {index}: a={a}, b={b} must both be positive")
            elif a * a < b:
                problems.append(f"pair {index}: a^2 = {a * a} < b = {b}")
        if self.t < 0:
            problems.append(f"t = {self.t} is negative")
        if self.is_odd and self.c <= 0:
            problems.append(f"c = {self.c} is not positive")
        if not self.is_odd and self.quadratic_count < 2:
            problems.append("even form needs at least one (a_j, b_j) pair")
        return problems

    def to_json(self) -> dict:
        return {
            "pairs": [[fraction_str(a), fraction_str(b)] for a, b in self.pairs],
            "t": fraction_str(self.t),
            "c": None if self.c is None else fraction_str(self.c),
        }


def theorem3_bound(n: int) -> Fraction:
    """Lower bound on `q_1 + q_{2n-1}` for the even form with `n` quadratic factors."""
    return Fraction(2 * (2 * n * n - 3 * n), (n - 1) ** 2)


def theorem4_bound(n: int) -> Fraction:
    """Lower bound on `q_1 + q_{2n}` for the odd form with `n` quadratic factors."""
    return Fraction(8 * (2 * n * n - n - 1), (2 * n - 1) ** 2)


def theorem3_4_sum_check(form: FactoredForm) -> BoundCertificate:
    """Expand `form` and compare the end-ratio sum with its claimed lower bound exactly.

    The certificate's `margin` is sum minus bound and `violated` is set when it is negative. The bound does not hold
    for every admissible form: `(x + 5/8)^2 (x + 1/4)^2 (x + 5/4)^2 (x^2 + 29/20 x + 16384/625)` falls short of it.
    """
    criterion = Criterion.Thm4 if form.is_odd else Criterion.Thm3
    n = form.quadratic_count
    degree = 2 * n + (1 if form.is_odd else 0)
    if problems := form.hypothesis_violations():
        return BoundCertificate.not_applicable(criterion, degree, "; ".join(problems))

    p = form.expand()
    q = q_sequence(p)
    last = degree - 1
    total = q[1] + q[last]
    bound = theorem4_bound(n) if form.is_odd else theorem3_bound(n)
    margin = total - bound
    label = f"q_1 + q_{last}"
    if margin < 0:
        _LOGGER.warning(f"{criterion} sum bound fails on {form.to_json()}: {total} < {bound}")
        witnesses = (Witness(label, None, total, "<", bound),)
    else:
        witnesses = (
            Witness(label, None, total, ">=", bound),
            # Either end ratio reaches half the bound.
            Witness(f"max(q_1, q_{last})", None, max(q[1], q[last]), ">=", bound / 2),
        )
    return BoundCertificate(
        criterion,
        degree,
        True,
        fired=margin >= 0,
        direction=Direction.QSumBound,
        witnesses=witnesses,
        margin=margin,
        certifying=False,
    )
