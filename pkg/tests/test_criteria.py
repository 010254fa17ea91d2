import os
import random
import unittest
from fractions import Fraction
from pathlib import Path

from hypothesis import given, settings, strategies as st

from qratio.constructions import hutchinson_extremal, sharp_pr1, sharp_thm2, theorem2_factored_form
from qratio.enums import Criterion, Direction
from qratio.exceptions import BadParams
from qratio.criteria import (
    FactoredForm,
    certified_inv_cos_sq,
    combine_bounds,
    cor_anya_lower_bound,
    corollary1_bound,
    corollary1_test,
    corollary2_bounds,
    corollary2_reduction,
    corollary2_sweep,
    corollary2_test,
    even_index_thresholds,
    find_contradictions,
    find_refuted_claims,
    hutchinson_test,
    legal_corollary2_params,
    newton_necessary,
    prop_anya_certificate,
    prop_anya_points,
    run_all_criteria,
    sign_at_negative_sqrt,
    sqrt_enclosure,
    theorem1_bound,
    theorem1_sum_test,
    theorem3_4_sum_check,
    theorem3_bound,
    theorem4_bound,
    theorem_A_test,
    theorem_B_test,
    theorem_D_test,
    theorem_E_test,
    theorem_F_test,
)
from qratio.oracle import count_real_roots
from qratio.poly import Poly, coeffs_from_q, q_sequence, read_poly, reverse, segment

FIXTURES = Path(__file__).parent / "fixtures"
# Set to run the acceptance-size sweeps (10^4 random polynomials).
FULL_SWEEPS = bool(os.environ.get("QRATIO_FULL_SWEEPS"))

small_fractions = st.fractions(min_value=Fraction(1, 8), max_value=8, max_denominator=8)

# (x + 5/8)^2 (x + 1/4)^2 (x + 5/4)^2 (x^2 + 29/20 x + 16384/625): six real roots, end-ratio sum below the bound.
SHORT_SUM_FORM = FactoredForm.build(
    [(Fraction(5, 8), Fraction(25, 64)), (Fraction(1, 4), Fraction(1, 16)), (Fraction(5, 4), Fraction(25, 16))],
    t=Fraction(29, 40),
)


def random_positive_poly(rng: random.Random, max_degree: int = 8) -> Poly:
    degree = rng.randint(2, max_degree)
    return Poly([Fraction(rng.randint(1, 30), rng.randint(1, 6)) for _ in range(degree + 1)])


def random_signed_poly(rng: random.Random, max_degree: int = 7) -> Poly:
    degree = rng.randint(2, max_degree)
    coeffs = [Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(degree)]
    return Poly(coeffs + [Fraction(rng.randint(1, 12))])


class CertifiedConstantTest(unittest.TestCase):

    def test_exact_values(self):
        for m, value in ((1, 4), (2, 2), (4, Fraction(4, 3))):
            constant = certified_inv_cos_sq(m)
            self.assertTrue(constant.is_exact)
            self.assertEqual(constant.lower, value)

    def test_golden_ratio_enclosure(self):
        # 1/cos^2(pi/5) = 6 - 2 sqrt(5)
        constant = certified_inv_cos_sq(3, 128)
        self.assertLess(constant.lower, constant.upper)
        self.assertGreaterEqual((6 - constant.lower) ** 2, 20)
        self.assertLessEqual((6 - constant.upper) ** 2, 20)
        self.assertLessEqual(constant.upper - constant.lower, Fraction(1, 2 ** 128) * constant.upper)

    def test_decreasing_in_m(self):
        values = [certified_inv_cos_sq(m, 64) for m in range(1, 12)]
        for left, right in zip(values, values[1:]):
            self.assertGreater(left.lower, right.upper)
        self.assertGreater(values[-1].lower, 1)

    def test_invalid_m(self):
        with self.assertRaises(BadParams):
            certified_inv_cos_sq(0)


class ClassicalTest(unittest.TestCase):

    def test_hutchinson_extremal_fires(self):
        certificate = hutchinson_test(hutchinson_extremal(5))
        self.assertTrue(certificate.fired)
        self.assertEqual(certificate.direction, Direction.RealRootedness)
        self.assertEqual(certificate.root_count_interval(), (5, 5))
        self.assertEqual(count_real_roots(hutchinson_extremal(5)).total_with_multiplicity, 5)

    def test_hutchinson_not_applicable(self):
        self.assertFalse(hutchinson_test(Poly([1, -1, 1])).applicable)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.fractions(min_value=4, max_value=16, max_denominator=8), min_size=1, max_size=9))
    def test_hutchinson_segments_are_real_rooted(self, q):
        p = coeffs_from_q(1, 1, q)
        self.assertTrue(hutchinson_test(p).fired)
        for i in range(p.degree + 1):
            for j in range(i + 1, p.degree + 1):
                part = segment(p, i, j)
                self.assertEqual(count_real_roots(part, isolate=False).total_with_multiplicity, j, (q, i, j))

    def test_newton_fires_below_threshold(self):
        certificate = newton_necessary(Poly([1, 1, 1]))
        self.assertTrue(certificate.fired)
        self.assertEqual(certificate.root_count_interval(), (0, 0))

    def test_newton_holds_on_binomial(self):
        self.assertFalse(newton_necessary(Poly.linear_power(-1, 6)).fired)


class TrigonometricTest(unittest.TestCase):

    def test_theorem_a_quadratic(self):
        certificate = theorem_A_test(Poly([1, 1, 1]))
        self.assertTrue(certificate.fired)
        self.assertEqual(certificate.direction, Direction.Positivity)

    def test_theorem_a_quartic(self):
        self.assertTrue(theorem_A_test(Poly([1, 1, 1, 1, 1])).fired)

    def test_theorem_a_boundary_is_not_fired(self):
        q = [Fraction(4, 3), 1] * 3 + [Fraction(4, 3)]
        certificate = theorem_A_test(coeffs_from_q(1, 1, q))
        self.assertTrue(certificate.applicable)
        self.assertFalse(certificate.fired)
        self.assertFalse(certificate.indeterminate)

    def test_theorem_a_needs_even_degree(self):
        self.assertFalse(theorem_A_test(Poly([1, 1, 1, 1])).applicable)

    def test_theorem_b(self):
        p = Poly([1, 1, 1, 1])  # (x + 1)(x^2 + 1)
        certificate = theorem_B_test(p)
        self.assertTrue(certificate.fired)
        self.assertEqual(certificate.root_count_interval(), (1, 1))

    def test_even_index_thresholds(self):
        thresholds = even_index_thresholds(5, 64)
        self.assertEqual([k for k, _ in thresholds], [2, 4])
        self.assertEqual(thresholds[0][1].lower, Fraction(3, 2))
        self.assertEqual(thresholds[1][1].lower, Fraction(15, 8))

    def test_theorem_d_allows_zero_odd_coefficients(self):
        certificate = theorem_D_test(Poly([1, 0, 1]))
        self.assertTrue(certificate.fired)
        self.assertEqual(certificate.root_count_interval(), (0, 0))

    def test_theorem_e(self):
        p = Poly([-1, 1, -1, 1])  # (x - 1)(x^2 + 1)
        self.assertTrue(theorem_E_test(p).fired)
        self.assertEqual(count_real_roots(p).total_with_multiplicity, 1)

    def test_theorem_f_mirrors_e(self):
        rng = random.Random(7)
        for _ in range(200):
            p = random_signed_poly(rng)
            if p.degree % 2 == 0 or p.coeffs[0] == 0:
                continue
            self.assertEqual(theorem_F_test(p).fired, theorem_E_test(reverse(p)).fired)

    def test_theorem_f_needs_even_index_positivity(self):
        p = Poly([-6, 1, 4, 1])  # (x - 1)(x + 2)(x + 3)
        self.assertFalse(theorem_F_test(p).applicable)
        self.assertTrue(theorem_F_test(Poly([1, -1, 1, -1])).fired)


class EndRatioTest(unittest.TestCase):

    def test_bounds(self):
        self.assertEqual(theorem1_bound(4), 4)
        self.assertEqual(corollary1_bound(4), 2)
        self.assertEqual(corollary2_bounds(4, 2, 1), (2, 2))
        self.assertEqual(legal_corollary2_params(5), [(2, 1), (2, 2), (3, 1)])

    def test_theorem1_fires_as_claim_only(self):
        certificate = theorem1_sum_test(Poly([1, 1, 1, 1, 1]))
        self.assertTrue(certificate.fired)
        self.assertFalse(certificate.certifying)
        self.assertEqual(certificate.claimed_interval(), (0, 0))
        self.assertEqual(certificate.root_count_interval(), (0, 4))
        self.assertTrue(corollary1_test(Poly([1, 1, 1, 1, 1])).fired)

    def test_theorem1_counterexamples(self):
        cases = [
            (read_poly(FIXTURES / "thm1_sum_degree5.txt"), 3),
            (read_poly(FIXTURES / "thm1_sum_degree5_b.txt"), 3),
            (SHORT_SUM_FORM.expand(), 6),
        ]
        for p, roots in cases:
            actual = count_real_roots(p).total_with_multiplicity
            self.assertEqual(actual, roots, str(p))
            certificate = theorem1_sum_test(p)
            self.assertTrue(certificate.fired)
            self.assertEqual(certificate.bound, p.degree - 4)
            self.assertTrue(certificate.refuted_by(actual))
            certificates = run_all_criteria(p, 64)
            self.assertEqual(find_contradictions(certificates, actual), [])
            self.assertEqual([c.criterion for c in find_refuted_claims(certificates, actual)], [Criterion.Thm1])
            lower, upper = combine_bounds(certificates, p.degree)
            self.assertLessEqual(lower, actual)
            self.assertLessEqual(actual, upper)

    def test_first_counterexample_sum(self):
        q = q_sequence(read_poly(FIXTURES / "thm1_sum_degree5.txt"))
        self.assertEqual(q[1] + q[4], Fraction(3460, 891))
        self.assertLess(q[1] + q[4], theorem1_bound(5))

    def test_sharp_family_sits_on_the_bound(self):
        for n in range(4, 101):
            p = sharp_thm2(n)
            certificate = theorem1_sum_test(p)
            self.assertFalse(certificate.fired)
            self.assertEqual(certificate.witnesses[0].lhs, theorem1_bound(n))
            self.assertTrue(all(w.holds() for w in certificate.witnesses))

    def test_corollary1_silent_on_sharp_family(self):
        for n in range(4, 101):
            certificate = corollary1_test(sharp_thm2(n))
            self.assertTrue(certificate.applicable)
            self.assertFalse(certificate.fired, n)

    def test_corollary2_params(self):
        p = Poly([1] * 7)
        with self.assertRaises(BadParams):
            corollary2_test(p, 1, 1)
        with self.assertRaises(BadParams):
            corollary2_test(p, 3, 3)
        self.assertEqual(len(corollary2_sweep(p)), len(legal_corollary2_params(6)))

    def test_corollary2_sharp_family(self):
        for n in range(4, 21):
            for m, j in legal_corollary2_params(n):
                p = sharp_pr1(n, m, j)
                certificate = corollary2_test(p, m, j)
                self.assertFalse(certificate.fired, (n, m, j))
                first, second = corollary2_bounds(n, m, j)
                self.assertEqual(certificate.witnesses[0].lhs, first)
                self.assertEqual(certificate.witnesses[1].lhs, second)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(small_fractions, min_size=5, max_size=9))
    def test_corollary2_reduces_to_corollary1(self, coeffs):
        p = Poly(coeffs)
        for m, j in legal_corollary2_params(p.degree):
            reduced = corollary2_reduction(p, m, j)
            self.assertEqual(reduced.degree, m + 2)
            self.assertEqual(corollary2_test(p, m, j).fired, corollary1_test(reduced).fired)


class FactoredFormTest(unittest.TestCase):

    def test_theorem2_forms_are_tight(self):
        for n in range(4, 14):
            form = theorem2_factored_form(n)
            self.assertEqual(form.expand(), sharp_thm2(n))
            certificate = theorem3_4_sum_check(form)
            self.assertTrue(certificate.fired)
            self.assertEqual(certificate.margin, 0)
            self.assertEqual(certificate.criterion, Criterion.Thm4 if n % 2 else Criterion.Thm3)

    def test_bounds_agree_with_theorem1(self):
        for n in range(2, 10):
            self.assertEqual(theorem3_bound(n), theorem1_bound(2 * n))
            self.assertEqual(theorem4_bound(n), theorem1_bound(2 * n + 1))

    def test_odd_special_factor_includes_c(self):
        form = FactoredForm.build([(2, 3)], t=1, c=5)
        self.assertEqual(form.special_factor(), Poly([Fraction(1, 15), 2, 1]))
        self.assertEqual(form.expand().coeffs[0], 1)

    def test_hypothesis_violations(self):
        form = FactoredForm.build([(1, 2)], t=-1)
        self.assertEqual(len(form.hypothesis_violations()), 2)
        self.assertFalse(theorem3_4_sum_check(form).applicable)

    def test_sum_bound_can_fail(self):
        certificate = theorem3_4_sum_check(SHORT_SUM_FORM)
        self.assertTrue(certificate.applicable)
        self.assertEqual(certificate.degree, 8)
        self.assertTrue(certificate.violated)
        self.assertFalse(certificate.fired)
        self.assertFalse(certificate.certifying)
        self.assertLess(certificate.margin, 0)
        self.assertTrue(all(w.holds() for w in certificate.witnesses))
        data = certificate.to_json()
        self.assertTrue(data["violated"])
        self.assertTrue(data["margin"].startswith("-"))

    def _check_margin(self, form: FactoredForm):
        certificate = theorem3_4_sum_check(form)
        self.assertTrue(certificate.applicable)
        q = q_sequence(form.expand())
        last = certificate.degree - 1
        bound = theorem4_bound(form.quadratic_count) if form.is_odd else theorem3_bound(form.quadratic_count)
        self.assertEqual(certificate.margin, q[1] + q[last] - bound)
        self.assertEqual(certificate.violated, certificate.margin < 0)
        self.assertEqual(certificate.fired, not certificate.violated)
        self.assertTrue(all(w.holds() for w in certificate.witnesses))
        self.assertEqual(certificate.root_count_interval(), (0, certificate.degree))

    @settings(max_examples=500, deadline=None)
    @given(
        st.lists(st.tuples(small_fractions, small_fractions), min_size=1, max_size=3),
        st.fractions(min_value=0, max_value=4, max_denominator=8),
    )
    def test_even_form_margin(self, raw_pairs, t):
        # a_j^2 >= b_j by construction.
        self._check_margin(FactoredForm.build([(a, min(b, a * a)) for a, b in raw_pairs], t))

    @settings(max_examples=500, deadline=None)
    @given(
        st.lists(st.tuples(small_fractions, small_fractions), min_size=1, max_size=3),
        st.fractions(min_value=0, max_value=4, max_denominator=8),
        small_fractions,
    )
    def test_odd_form_margin(self, raw_pairs, t, c):
        self._check_margin(FactoredForm.build([(a, min(b, a * a)) for a, b in raw_pairs], t, c))


class AlternationTest(unittest.TestCase):

    def test_sqrt_enclosure(self):
        lo, hi = sqrt_enclosure(Fraction(2), 20)
        self.assertLessEqual(lo * lo, 2)
        self.assertGreaterEqual(hi * hi, 2)
        self.assertLessEqual(hi - lo, Fraction(1, 2 ** 20))
        self.assertEqual(sqrt_enclosure(Fraction(9, 4), 10), (Fraction(3, 2), Fraction(3, 2)))

    def test_sign_at_negative_sqrt(self):
        self.assertEqual(sign_at_negative_sqrt(Poly([-2, 0, 1]), Fraction(2)), 0)
        self.assertEqual(sign_at_negative_sqrt(Poly([1, 1]), Fraction(2)), -1)
        self.assertEqual(sign_at_negative_sqrt(Poly([2, 1]), Fraction(2)), 1)
        self.assertEqual(sign_at_negative_sqrt(Poly([-1, -1]), Fraction(2)), 1)

    def test_extremal_points(self):
        p = hutchinson_extremal(6)
        points = prop_anya_points(p)
        self.assertEqual([point.index for point in points], [1, 2, 3, 4, 5])
        self.assertTrue(all(point.holds for point in points))
        for point in points:
            self.assertLessEqual(point.interval_lo, point.witness_hi)
            self.assertLessEqual(point.witness_lo, point.interval_hi)
        self.assertTrue(prop_anya_certificate(p).fired)
        self.assertEqual(cor_anya_lower_bound(p).bound, 6)

    def test_not_applicable_below_one(self):
        p = coeffs_from_q(1, 1, [Fraction(1, 2), 5, 5])
        self.assertFalse(prop_anya_certificate(p).applicable)
        self.assertFalse(cor_anya_lower_bound(p).applicable)

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.fractions(min_value=1, max_value=12, max_denominator=6), min_size=1, max_size=7))
    def test_points_alternate(self, q):
        p = coeffs_from_q(1, 1, q)
        self.assertTrue(all(point.holds for point in prop_anya_points(p)))
        lower = cor_anya_lower_bound(p).bound
        self.assertLessEqual(lower, count_real_roots(p, isolate=False).total_with_multiplicity)


class SoundnessTest(unittest.TestCase):

    def _check(self, p: Poly):
        actual = count_real_roots(p, isolate=False).total_with_multiplicity
        certificates = run_all_criteria(p, 64)
        self.assertEqual(find_contradictions(certificates, actual), [], str(p))
        lower, upper = combine_bounds(certificates, p.degree)
        self.assertLessEqual(lower, actual)
        self.assertLessEqual(actual, upper)
        for certificate in certificates:
            if certificate.fired and certificate.direction == Direction.Positivity:
                for x in range(-10, 11):
                    self.assertGreater(p(Fraction(x, 3)), 0)

    def test_seeded_positive_sweep(self):
        rng = random.Random(1)
        for _ in range(2000):
            self._check(random_positive_poly(rng))

    def test_seeded_signed_sweep(self):
        rng = random.Random(2)
        for _ in range(1000):
            self._check(random_signed_poly(rng))

    @unittest.skipUnless(FULL_SWEEPS, "set QRATIO_FULL_SWEEPS to run the 10^4 polynomial sweep")
    def test_full_positive_sweep(self):
        rng = random.Random(10_000)
        for _ in range(10_000):
            self._check(random_positive_poly(rng))

    def test_constructions(self):
        for n in range(4, 12):
            self._check(sharp_thm2(n))
            self._check(hutchinson_extremal(n))

    def test_contradiction_detection(self):
        p = Poly([1, 1, 1])
        bogus = newton_necessary(Poly.linear_power(-1, 2))  # not fired
        self.assertEqual(find_contradictions([bogus], 2), [])
        certificate = theorem_A_test(p)
        self.assertEqual(find_contradictions([certificate], 2), [certificate])


if __name__ == '__main__':
    unittest.main()
