import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from qratio.constructions import counterexample_Q, stratum_representative
from qratio.conjectures import (
    conj1_bound,
    conj2_bound,
    conj2_coefficients,
    conj3_bound,
    conj3_coefficients,
    evaluate_conjecture,
    first_violation,
    parity_changes,
    tropical_corner_count,
    upper_hull_indices,
    verify_counterexamples,
    weighted_points,
)
from qratio.enums import Conjecture
from qratio.exceptions import BadParams, NotApplicableError
from qratio.poly import Poly, scale_transform


class TropicalTest(unittest.TestCase):

    def test_binomial_has_every_corner(self):
        self.assertEqual(tropical_corner_count(Poly.linear_power(-1, 3)), 3)
        self.assertEqual(upper_hull_indices(weighted_points(Poly.linear_power(-1, 5))), [0, 1, 2, 3, 4, 5])

    def test_zero_coefficients_skipped(self):
        self.assertEqual(weighted_points(Poly([1, 0, 1])), [(0, 1), (2, 1)])
        self.assertEqual(tropical_corner_count(Poly([1, 0, 1])), 1)
        for n in range(1, 11):
            self.assertEqual(tropical_corner_count(Poly([1] + [0] * (n - 1) + [1])), 1)

    def test_collinear_points_are_not_corners(self):
        # w_k = C(4, k) a_k = 2^k is log-linear.
        p = Poly([1, Fraction(1, 2), Fraction(2, 3), Fraction(2, 1), 16])
        self.assertEqual(tropical_corner_count(p), 1)

    def test_negative_coefficients(self):
        with self.assertRaises(NotApplicableError):
            weighted_points(Poly([1, -1, 1]))

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(st.fractions(min_value=Fraction(1, 8), max_value=8, max_denominator=8), min_size=2, max_size=9),
        st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=5),
        st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=5),
    )
    def test_corner_count_scale_invariant(self, coeffs, a, b):
        p = Poly(coeffs)
        self.assertEqual(tropical_corner_count(scale_transform(p, a, b)), tropical_corner_count(p))


class EvaluatorTest(unittest.TestCase):

    def test_parity_changes(self):
        self.assertEqual(parity_changes([0, 1, 2, 5]), 3)
        self.assertEqual(parity_changes([0, 2, 4]), 0)
        self.assertEqual(parity_changes([]), 0)

    def test_coefficients(self):
        p = Poly([1, 2, 1])
        self.assertEqual(conj3_coefficients(p), [1, 3, 1])
        self.assertEqual(conj2_coefficients(p), [1, 7, 3])

    def test_binomials_hold(self):
        for n in range(1, 16):
            p = Poly.linear_power(-1, n)
            for conjecture in Conjecture:
                report = evaluate_conjecture(conjecture, p)
                self.assertEqual(report.actual_roots, n)
                self.assertEqual(report.predicted_bound, n)
                self.assertFalse(report.violated)

    def test_strictness(self):
        # q_1 = 1 exactly: c_1 = 0, dropped only under the strict rule.
        p = Poly([1, 1, 1])
        self.assertEqual(conj3_bound(p).indices, (0, 1, 2))
        self.assertEqual(conj3_bound(p, strict=True).indices, (0, 2))
        self.assertEqual(conj3_bound(p, strict=True).predicted_bound, 0)

    def test_requires_positive(self):
        with self.assertRaises(NotApplicableError):
            conj2_bound(Poly([1, -3, 1]))
        with self.assertRaises(NotApplicableError):
            conj1_bound(Poly([0, 1, 1]))

    def test_q15_violates_conjecture_3(self):
        report = conj3_bound(counterexample_Q(15))
        self.assertTrue(report.violated)
        self.assertEqual(report.actual_roots, 13)
        self.assertLessEqual(report.predicted_bound, 11)
        for index in (8, 9, 10):
            self.assertNotIn(index, report.indices)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=10), st.data())
    def test_strata_representatives(self, n, data):
        l = data.draw(st.sampled_from(range(n % 2, n + 1, 2)))
        report = conj3_bound(stratum_representative(n, l))
        self.assertEqual(report.actual_roots, l)
        self.assertEqual(report.violated, l > report.predicted_bound)


class CounterexampleTest(unittest.TestCase):

    def test_verify_up_to_20(self):
        reports = verify_counterexamples(20)
        self.assertEqual(len(reports), 2 * 6)
        for report in reports:
            self.assertEqual(report.actual_roots, report.degree - 2)
            if report.conjecture == Conjecture.LogConcaveC3:
                self.assertTrue(report.violated)
                self.assertEqual(report.label, f"Q_{report.degree}")

    def test_conjecture_2_threshold(self):
        reports = verify_counterexamples(60)
        threshold = first_violation(reports, Conjecture.NewtonWeightedC2)
        self.assertIsNotNone(threshold)
        self.assertEqual(threshold.degree, 24)
        self.assertEqual(threshold.label, "Q_24")
        for report in reports:
            if report.conjecture == Conjecture.LogConcaveC3:
                self.assertTrue(report.violated, report.label)
            elif report.degree < 24:
                self.assertFalse(report.violated, report.label)
        for report in reports:
            if report.conjecture == Conjecture.NewtonWeightedC2 and report.degree >= 24:
                self.assertTrue(report.violated, report.label)
                for index in (report.degree - 7, report.degree - 6, report.degree - 5):
                    self.assertNotIn(index, report.indices)

    def test_tropical_reports(self):
        reports = verify_counterexamples(16, include_tropical=True)
        self.assertEqual([r.conjecture for r in reports[:3]], list(Conjecture))

    def test_parallel_matches_serial(self):
        self.assertEqual(verify_counterexamples(18, workers=2), verify_counterexamples(18))

    def test_n_max_too_small(self):
        with self.assertRaises(BadParams):
            verify_counterexamples(14)


if __name__ == '__main__':
    unittest.main()
