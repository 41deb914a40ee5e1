"""
Unit tests for exact values and their records
"""
import math
import unittest
from fractions import Fraction
from unittest import TestCase

from hypothesis import given, settings
from hypothesis import strategies as st

from causets.exact import PHI, Surd5, exact_sum, parse_exact, to_record

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=50)


class Surd5Tests(TestCase):
    """
    Tests field arithmetic, ordering and float conversion in Q(sqrt 5)
    """

    def test_phi_identities(self):
        self.assertEqual(PHI * PHI + PHI, 1)
        self.assertEqual(PHI ** 2, 1 - PHI)
        self.assertEqual(1 / PHI, PHI + 1)
        self.assertAlmostEqual(float(PHI), (math.sqrt(5) - 1) / 2, places=15)

    def test_powers_of_phi_keep_precision(self):
        for k in range(1, 30):
            self.assertAlmostEqual(float(PHI ** k) / ((math.sqrt(5) - 1) / 2) ** k, 1,
                                   places=10)

    def test_ordering(self):
        self.assertTrue(PHI < 1)
        self.assertTrue(PHI > Fraction(61, 100))
        self.assertTrue(PHI ** 3 < PHI ** 2)
        self.assertEqual(abs(-PHI), PHI)

    def test_rational_promotion(self):
        self.assertEqual(Surd5(Fraction(1, 2)), Fraction(1, 2))
        self.assertEqual(hash(Surd5(3)), hash(3))
        self.assertTrue(Surd5(2).is_rational())

    def test_division_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            PHI / Surd5(0)

    def test_rejects_floats(self):
        with self.assertRaises(TypeError):
            Surd5(0.5, 1)

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(rationals, rationals, rationals, rationals)
    def test_field_laws(self, a, b, c, d):
        x, y = Surd5(a, b), Surd5(c, d)
        self.assertEqual(x * y, y * x)
        self.assertEqual((x + y) - y, x)
        if y:
            self.assertEqual((x / y) * y, x)
        if abs(float(x) - float(y)) > 1e-9:
            self.assertEqual(x < y, float(x) < float(y))


class ExactRecordTests(TestCase):
    """
    Tests the lossless num/den and p/q/r records
    """

    def test_fraction_record(self):
        self.assertEqual(to_record(Fraction(5, 8)), {'num': '5', 'den': '8'})
        self.assertEqual(parse_exact({'num': '5', 'den': '8'}), Fraction(5, 8))

    def test_surd_record(self):
        self.assertEqual(to_record(PHI), {'p': '-1', 'q': '1', 'r': '2', 'surd': 5})
        self.assertEqual(parse_exact(to_record(PHI ** 5)), PHI ** 5)

    def test_float_record(self):
        self.assertEqual(parse_exact(to_record(0.25)), 0.25)

    def test_bad_records(self):
        with self.assertRaises(ValueError):
            parse_exact({'x': 1})
        with self.assertRaises(TypeError):
            parse_exact('5/8')
        with self.assertRaises(TypeError):
            to_record('5/8')

    def test_exact_sum(self):
        self.assertEqual(exact_sum([]), 0)
        self.assertIsInstance(exact_sum([]), Fraction)
        self.assertEqual(exact_sum([PHI, PHI ** 2]), 1)


if __name__ == '__main__':
    unittest.main()
