"""
Unit tests for measures on downward-branching trees
"""
import itertools
import math
import unittest
from collections import Counter
from fractions import Fraction
from unittest import TestCase

from causets.exceptions import TailUnbounded
from causets.families.stems import ordered_stems
from causets.families.tree import (TreeSpec, bare_chain_tree, cherry_tree,
                                   down_tree_causet, every_level_tree, pendant_tree,
                                   single_leaf, sparse_tree)
from causets.measures.base import Grade
from causets.measures.tree import tree_marking_sampler, tree_measure
from causets.seeding import make_rng


class TreeMeasureTests(TestCase):
    """
    Tests existence, exact first-element laws and order invariance
    """

    def test_pendants(self):
        result = tree_measure(pendant_tree((1, 2)))
        self.assertTrue(result.exists)
        self.assertEqual(result.tail_sum_bound, Fraction(3, 4))
        mu = result.measure
        law = mu.first_element_law()
        self.assertEqual({mu.support.name(x): v for x, v in law.items()},
                         {'x0': Fraction(3, 8), 'y1': Fraction(3, 8), 'y2': Fraction(1, 4)})
        self.assertEqual(mu.prob((0,)), Fraction(3, 8))
        self.assertEqual(result.t_sequences['x0'], (Fraction(1, 2), Fraction(1, 4)))

    def test_cherry(self):
        mu = tree_measure(cherry_tree()).measure
        self.assertEqual(mu.prob((0,)), Fraction(1, 4))
        self.assertEqual(sum(mu.first_element_law().values()), 1)

    def test_bare_chain(self):
        mu = tree_measure(bare_chain_tree()).measure
        self.assertEqual(mu.prob((0, 1, 2)), 1)

    def test_order_invariance_and_consistency(self):
        mu = tree_measure(pendant_tree((1, 2))).measure
        self.assertEqual(mu.grade, Grade.EXACT_RATIONAL)
        values = {}
        for seq in ordered_stems(mu.support, 4):
            law = mu.transition(seq)
            self.assertTrue(law.exhaustive)
            self.assertEqual(law.listed, 1)
            values.setdefault(frozenset(seq), set()).add(mu.prob(seq))
        self.assertTrue(all(len(v) == 1 for v in values.values()))

    def test_no_measure(self):
        result = tree_measure(every_level_tree())
        self.assertFalse(result.exists)
        self.assertEqual(result.tail_sum_bound, math.inf)
        self.assertIsNone(result.measure)
        self.assertEqual(result.t_sequences['x0'][:3],
                         (Fraction(1, 2), Fraction(1, 4), Fraction(1, 6)))

    def test_sparse_support(self):
        result = tree_measure(sparse_tree())
        mu = result.measure
        self.assertTrue(result.exists)
        self.assertEqual(mu.grade, Grade.FLOAT)
        law = mu.first_element_law()
        self.assertEqual(sum(law.values()), 1)
        self.assertGreater(mu.prob((0,)), 0)
        self.assertLess(mu.tolerance, 1e-8)
        transition = mu.transition(())
        self.assertFalse(transition.exhaustive)

    def test_pairwise_invariance(self):
        for spec in (sparse_tree(), cherry_tree(), pendant_tree((1, 2))):
            mu = tree_measure(spec).measure
            first = mu.transition(()).elements[:4]
            for y, z in itertools.combinations(first, 2):
                gap = abs(float(mu.prob((y, z))) - float(mu.prob((z, y))))
                self.assertLess(gap, 1e-9, spec.label)

    def test_missing_tail_bound(self):
        spec = TreeSpec(single_leaf, lambda: iter(range(1, 10 ** 6)), label='unbounded')
        with self.assertRaises(TailUnbounded):
            tree_measure(spec)
        with self.assertRaises(TypeError):
            tree_measure(pendant_tree((1,)).label)


class TreeMarkingTests(TestCase):
    """
    Tests that the marking sampler draws the first element with the exact law
    """

    def test_marking_matches_law(self):
        spec = pendant_tree((1, 2))
        tree = down_tree_causet(spec)
        law = tree_measure(tree).measure.first_element_law()
        rng = make_rng(17)
        draws = 10 ** 5
        counts = Counter(tree_marking_sampler(tree, rng) for _ in range(draws))
        self.assertEqual(set(counts), set(law))
        for x, p in law.items():
            band = 5 * math.sqrt(draws * float(p) * (1 - float(p)))
            self.assertLess(abs(counts[x] - draws * float(p)), band)

    def test_no_marking_without_measure(self):
        with self.assertRaises(TailUnbounded):
            tree_marking_sampler(every_level_tree(), 0)


if __name__ == '__main__':
    unittest.main()
