import random
import unittest
from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from qratio.constructions import counterexample_Q
from qratio.exceptions import BadInterval, ZeroPolynomial
from qratio.oracle import (
    count_in_interval,
    count_real_roots,
    count_real_roots_with_known_root,
    sign_changes,
    square_free_decompose,
    square_free_part,
    sturm_chain,
)
from qratio.poly import Poly

_X = sympy.Symbol("x")


def sympy_counts(p: Poly) -> tuple[int, int]:
    """(with multiplicity, distinct) real root counts from sympy's own square-free factorization and Sturm count."""
    sp = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], _X, domain="QQ"
    )
    _, factors = sp.sqf_list()
    total = sum(k * f.count_roots() for f, k in factors)
    distinct = sum(f.count_roots() for f, _ in factors)
    return total, distinct


integer_polys = st.lists(st.integers(min_value=-9, max_value=9), min_size=2, max_size=8).filter(
    lambda c: c[-1] != 0
).map(Poly)


class SturmTest(unittest.TestCase):

    def test_sign_changes_skip_zeros(self):
        self.assertEqual(sign_changes([1, 0, -1, 0, 0, 2]), 2)
        self.assertEqual(sign_changes([0, 0]), 0)

    def test_chain_of_quadratic(self):
        chain = sturm_chain(Poly([-1, 0, 1]))
        self.assertEqual(len(chain), 3)
        self.assertTrue(all(abs(member.leading) == 1 for member in chain))

    def test_count_in_interval_endpoints(self):
        p = Poly([-1, 1]) * Poly([-2, 1]) * Poly([-3, 1])
        self.assertEqual(count_in_interval(p, 1, 3), 1)
        self.assertEqual(count_in_interval(p, 1, 3, closed=True), 3)
        self.assertEqual(count_in_interval(p, 0, 10), 3)
        self.assertEqual(count_in_interval(p, Fraction(3, 2), Fraction(5, 2)), 1)

    def test_count_in_interval_counts_distinct(self):
        p = Poly.linear_power(1, 3) * Poly([1, 1])
        self.assertEqual(count_in_interval(p, -2, 2), 2)

    def test_bad_interval(self):
        with self.assertRaises(BadInterval):
            count_in_interval(Poly([1, 1]), 2, 2)


class SquareFreeTest(unittest.TestCase):

    def test_decompose(self):
        p = Poly.linear_power(1, 2) * Poly([2, 1]) * 5
        self.assertEqual(square_free_decompose(p), [(Poly([2, 1]), 1), (Poly([-1, 1]), 2)])

    def test_square_free_part(self):
        p = Poly.linear_power(-1, 13) * Poly([1, 0, 1])
        self.assertEqual(square_free_part(p), Poly([1, 1]) * Poly([1, 0, 1]))

    def test_constant(self):
        self.assertEqual(square_free_decompose(Poly([7])), [])
        with self.assertRaises(ZeroPolynomial):
            square_free_decompose(Poly())


class RootOracleTest(unittest.TestCase):

    def test_no_real_roots(self):
        report = count_real_roots(Poly([1, 0, 1]))
        self.assertEqual(report.total_with_multiplicity, 0)
        self.assertEqual(report.isolating_intervals, [])

    def test_multiplicity(self):
        p = Poly.linear_power(1, 2) * Poly([2, 1])
        report = count_real_roots(p)
        self.assertEqual(report.total_with_multiplicity, 3)
        self.assertEqual(report.distinct_count, 2)

    def test_isolating_intervals(self):
        p = Poly([-1, 1]) * Poly([-2, 1]) * Poly([-3, 1]) * Poly([-2, 0, 1])
        report = count_real_roots(p)
        self.assertEqual(report.total_with_multiplicity, 5)
        intervals = report.isolating_intervals
        self.assertEqual(len(intervals), 5)
        for root in (1, 2, 3):
            self.assertEqual(sum(interval.contains(root) for interval in intervals), 1)
        for left, right in zip(intervals, intervals[1:]):
            self.assertLessEqual(left.hi, right.lo)

    def test_refine(self):
        report = count_real_roots(Poly([-2, 0, 1]))
        for interval in report.isolating_intervals:
            narrow = interval.refine(Fraction(1, 1000))
            self.assertLessEqual(narrow.width, Fraction(1, 1000))
            p = interval.factor
            self.assertLessEqual(p(narrow.lo) * p(narrow.hi), 0)

    def test_known_root_fast_path(self):
        q15 = counterexample_Q(15)
        fast = count_real_roots_with_known_root(q15, -1)
        self.assertEqual(fast.total_with_multiplicity, 13)
        self.assertEqual(fast.total_with_multiplicity, count_real_roots(q15).total_with_multiplicity)
        self.assertTrue(fast.isolating_intervals[0].is_exact)

    def test_zero_polynomial(self):
        with self.assertRaises(ZeroPolynomial):
            count_real_roots(Poly())

    @settings(max_examples=150, deadline=None)
    @given(integer_polys)
    def test_matches_sympy(self, p):
        report = count_real_roots(p)
        self.assertEqual((report.total_with_multiplicity, report.distinct_count), sympy_counts(p))

    def test_seeded_products_of_known_factors(self):
        rng = random.Random(20240101)
        for _ in range(100):
            real = [Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(rng.randint(0, 4))]
            complex_count = rng.randint(0, 2)
            p = Poly.product(Poly([-r, 1]) for r in real)
            for _ in range(complex_count):
                p = p * Poly([rng.randint(1, 9), rng.randint(-1, 1), 1])
            if p.is_constant:
                continue
            report = count_real_roots(p)
            self.assertEqual(report.total_with_multiplicity, len(real))
            self.assertEqual(report.distinct_count, len(set(real)))


if __name__ == '__main__':
    unittest.main()
