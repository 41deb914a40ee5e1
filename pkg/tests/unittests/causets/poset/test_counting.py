"""
Unit tests for exact counting on finite posets
"""
import unittest
from fractions import Fraction
from unittest import TestCase

from hypothesis import given, settings

from causets.exceptions import NotAnOrderedStem, ResourceLimit
from causets.poset.counting import (count_linear_extensions, count_with_prefix,
                                    first_element_law, nu_uniform,
                                    rank_distribution)
from causets.poset.finite import antichain, build_finite_poset, chain
from tests.unittests.causets.strategies import brute_force_extensions, finite_posets


def ladder_poset(n):
    """
    a_j > a_i whenever j > i + 1
    """
    return build_finite_poset(range(n), [(i, j) for i in range(n) for j in range(i + 2, n)])


def fibonacci(n):
    # F_1 = 1, F_2 = 2, as counts of ladders
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


class CountLinearExtensionsTests(TestCase):
    """
    Tests e(P) against closed forms and against brute-force enumeration
    """

    def test_chain_and_antichain(self):
        self.assertEqual(count_linear_extensions(chain(6)), 1)
        self.assertEqual(count_linear_extensions(antichain(5)), 120)
        self.assertEqual(count_linear_extensions(antichain(0)), 1)

    def test_ladder_is_fibonacci(self):
        for n in range(1, 31):
            self.assertEqual(count_linear_extensions(ladder_poset(n)), fibonacci(n))
        self.assertEqual(count_linear_extensions(ladder_poset(5)), 8)

    def test_two_by_two_grid(self):
        p = build_finite_poset(range(4), [(0, 1), (0, 2), (1, 3), (2, 3)])
        self.assertEqual(count_linear_extensions(p), 2)

    def test_budget(self):
        with self.assertRaises(ResourceLimit):
            count_linear_extensions(antichain(12), budget=10)

    @settings(max_examples=60, deadline=None, derandomize=True)
    @given(finite_posets())
    def test_matches_brute_force(self, p):
        self.assertEqual(count_linear_extensions(p), len(brute_force_extensions(p)))


class UniformStemTests(TestCase):
    """
    Tests prefix counts, nu^X(E(s)) and rank distributions
    """

    def test_ladder_prefix_ratio(self):
        for n in range(6, 31):
            p = ladder_poset(n)
            for k in range(1, 6):
                self.assertEqual(nu_uniform(p, tuple(range(k))),
                                 Fraction(fibonacci(n - k), fibonacci(n)))

    def test_prefix_count(self):
        p = build_finite_poset([0, 1, 2], [(0, 1)])
        self.assertEqual(count_with_prefix(p, (0,)), 2)
        self.assertEqual(count_with_prefix(p, (2,)), 1)
        with self.assertRaises(NotAnOrderedStem):
            count_with_prefix(p, (1,))

    def test_empty_stem(self):
        self.assertEqual(nu_uniform(antichain(3), ()), 1)

    def test_rank_distribution_small(self):
        # a < x with b isolated: x is at position 2 or 3
        p = build_finite_poset([0, 1, 2], [(0, 1)])
        self.assertEqual(rank_distribution(p, 1),
                         [Fraction(0), Fraction(1, 3), Fraction(2, 3)])

    def test_chain_top_rank(self):
        self.assertEqual(rank_distribution(chain(4), 3), [0, 0, 0, 1])

    def test_first_element_law(self):
        p = build_finite_poset([0, 1, 2], [(0, 1)])
        self.assertEqual(first_element_law(p), {0: Fraction(2, 3), 2: Fraction(1, 3)})

    @settings(max_examples=40, deadline=None, derandomize=True)
    @given(finite_posets())
    def test_ranks_match_brute_force(self, p):
        orders = brute_force_extensions(p)
        for x in p:
            expected = [Fraction(sum(1 for o in orders if o[i] == x), len(orders))
                        for i in range(p.n)]
            self.assertEqual(rank_distribution(p, x), expected)

    @settings(max_examples=40, deadline=None, derandomize=True)
    @given(finite_posets())
    def test_nu_matches_brute_force(self, p):
        orders = brute_force_extensions(p)
        stem = orders[0][:2]
        hits = sum(1 for o in orders if o[:len(stem)] == stem)
        self.assertEqual(nu_uniform(p, stem), Fraction(hits, len(orders)))


if __name__ == '__main__':
    unittest.main()
