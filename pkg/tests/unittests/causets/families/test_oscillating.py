"""
Unit tests for the oscillating width-two causet
"""
import unittest
from unittest import TestCase

from causets.exceptions import UsageError
from causets.families.oscillating import (double_exponential, oscillating_causet,
                                          powers_of_two)


class OscillatingCausetTests(TestCase):
    """
    Tests chain offsets, the stage order and minimal elements
    """

    def setUp(self):
        self.causet = oscillating_causet(powers_of_two)

    def test_growth(self):
        self.assertEqual(double_exponential(3), 256)
        self.assertEqual(double_exponential(4), 2 ** 16)
        self.assertEqual(double_exponential(9, cap=100), 100)
        self.assertEqual(self.causet.chain_length(2), 1)
        self.assertEqual(self.causet.chain_length(4), 16)

    def test_offsets(self):
        self.assertEqual([self.causet.offset(n) for n in range(1, 6)], [0, 1, 2, 10, 26])
        self.assertEqual(len(self.causet.level_stem(3)), 10)
        self.assertEqual(self.causet.locate(9), (3, 8))

    def test_order(self):
        a, b = self.causet.parse('a'), self.causet.parse('b')
        c3, c4 = self.causet.parse('c3_1'), self.causet.parse('c4_1')
        self.assertFalse(self.causet.less(a, b))
        self.assertTrue(self.causet.less(a, c3))
        self.assertFalse(self.causet.less(b, c3))
        self.assertTrue(self.causet.less(b, c4))
        self.assertFalse(self.causet.less(c3, c4))
        self.assertTrue(self.causet.less(c3, self.causet.parse('c3_2')))

    def test_minimal_after(self):
        self.assertEqual(self.causet.minimal_after(()).elements, (0, 1))
        self.assertEqual(self.causet.minimal_after((0,)).elements, (1, 2))
        self.assertEqual(self.causet.minimal_after((1,)).elements, (0,))
        for n in range(1, 40):
            self.causet.check_down_set(self.causet.enumerate(n))

    def test_levels_increase(self):
        for n in range(1, 6):
            self.assertLess(self.causet.level_stem(n), self.causet.level_stem(n + 1))

    def test_names(self):
        self.assertEqual(self.causet.names((0, 1, 2, 9)), ['a', 'b', 'c3_1', 'c3_8'])
        with self.assertRaises(UsageError):
            self.causet.parse('c3_9')
        with self.assertRaises(UsageError):
            self.causet.parse('c2_1')

    def test_decreasing_growth(self):
        causet = oscillating_causet(lambda n: 10 - n, label='shrinking')
        with self.assertRaises(ValueError):
            causet.offset(6)


if __name__ == '__main__':
    unittest.main()
