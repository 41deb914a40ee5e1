"""
Unit tests for upward-branching forests and the chain families built on them
"""
import math
import unittest
from unittest import TestCase

from causets.exceptions import UnknownElement, UsageError
from causets.families.forest import (ChainPlusPoint, CountableAntichain,
                                     DisjointChains, binary_tree_causet,
                                     comb_causet, forest_causet, path_weight)


class ForestCausetTests(TestCase):
    """
    Tests the weight enumeration of paths, the order and the minimal elements
    of general forests
    """

    def setUp(self):
        self.binary = binary_tree_causet()

    def test_weights(self):
        self.assertEqual(path_weight((0,)), 1)
        self.assertEqual(path_weight((0, 1, 1)), 5)

    def test_enumeration_prefixes_are_stems(self):
        for n in range(1, 30):
            self.binary.check_down_set(self.binary.enumerate(n))

    def test_paths(self):
        self.assertEqual(self.binary.path_of(0), (0,))
        self.assertEqual(self.binary.path_of(1), (0, 0))
        self.assertEqual(self.binary.id_of((0, 1)), self.binary.parse('v0.1'))
        self.assertEqual(self.binary.name(self.binary.id_of((0, 1, 0))), 'v0.1.0')
        with self.assertRaises(UnknownElement):
            self.binary.id_of((1,))
        with self.assertRaises(UsageError):
            self.binary.parse('v1')

    def test_order(self):
        left, right = self.binary.id_of((0, 0)), self.binary.id_of((0, 1))
        leaf = self.binary.id_of((0, 0, 1))
        self.assertTrue(self.binary.less(0, leaf))
        self.assertTrue(self.binary.less(left, leaf))
        self.assertFalse(self.binary.less(right, leaf))
        self.assertEqual(self.binary.down(leaf), frozenset({0, left}))

    def test_minimal_after(self):
        self.assertEqual(self.binary.minimal_after(()).elements, (0,))
        found = self.binary.minimal_after((0,))
        self.assertEqual(set(found.elements), {self.binary.id_of((0, 0)),
                                               self.binary.id_of((0, 1))})
        self.assertTrue(found.exhaustive)

    def test_finite_forest_has_maximal_elements(self):
        forest = forest_causet(lambda path: 2 if not path else 0, label='pair')
        self.assertTrue(forest.is_maximal(0))
        self.assertEqual(forest.minimal_after(()).elements, (0, 1))
        with self.assertRaises(ValueError):
            forest.path_of(2)

    def test_comb(self):
        comb = comb_causet()
        self.assertEqual(comb.names(comb.enumerate(4)), ['v0', 'v0.0', 'v0.0.0', 'v0.1'])
        tooth = comb.parse('v0.1')
        self.assertEqual(comb.children(comb.path_of(tooth)), 1)
        self.assertEqual(len(comb.minimal_after((0, 1)).elements), 3)


class DisjointChainsTests(TestCase):
    """
    Tests the level-by-level and anti-diagonal numbering of disjoint chains
    """

    def test_two_chains(self):
        chains = DisjointChains(2)
        self.assertEqual(chains.names(chains.enumerate(4)), ['b1', 'c1', 'b2', 'c2'])
        self.assertEqual(chains.parse('c3'), 5)
        self.assertTrue(chains.less(0, 2))
        self.assertFalse(chains.less(0, 3))
        self.assertEqual(chains.minimal_after((0, 2)).elements, (1, 4))
        self.assertEqual(chains.heights({0, 1, 2}), {0: 2, 1: 1})
        self.assertEqual(chains.level_stem(2), frozenset(range(4)))

    def test_three_chains_names(self):
        chains = DisjointChains(3)
        self.assertEqual(chains.name(4), 'x2_2')
        self.assertEqual(chains.parse('x3_1'), 2)
        with self.assertRaises(UsageError):
            chains.parse('x4_1')

    def test_infinitely_many_chains(self):
        chains = DisjointChains(math.inf)
        for x in range(50):
            self.assertEqual(chains.element(*chains.locate(x)), x)
        found = chains.minimal_after(())
        self.assertFalse(found.exhaustive)
        self.assertEqual(len(found.elements), 64)
        with self.assertRaises(UsageError):
            chains.level_stem(1)
        for n in range(1, 20):
            chains.check_down_set(chains.enumerate(n))

    def test_bad_counts(self):
        with self.assertRaises(ValueError):
            DisjointChains(0)
        with self.assertRaises(ValueError):
            DisjointChains(1.5)


class AntichainAndPointTests(TestCase):
    """
    Tests the countable antichain and the chain with an isolated point
    """

    def test_antichain(self):
        antichain = CountableAntichain()
        self.assertEqual(antichain.name(0), 'z1')
        self.assertEqual(antichain.parse('z7'), 6)
        self.assertFalse(antichain.less(0, 1))
        found = antichain.minimal_after((0,), budget=5)
        self.assertEqual(found.elements, (1, 2, 3, 4, 5))
        self.assertFalse(found.exhaustive)

    def test_chain_plus_point(self):
        causet = ChainPlusPoint()
        self.assertEqual(causet.names(causet.enumerate(4)), ['b1', 'b2', 'x', 'b3'])
        x = causet.parse('x')
        self.assertTrue(causet.is_maximal(x))
        self.assertFalse(causet.is_maximal(causet.parse('b2')))
        self.assertFalse(any(causet.less(b, x) or causet.less(x, b)
                             for b in causet.enumerate(10) if b != x))
        self.assertEqual(causet.minimal_after(()).elements, (0, x))
        with self.assertRaises(UsageError):
            causet.parse('y')


if __name__ == '__main__':
    unittest.main()
