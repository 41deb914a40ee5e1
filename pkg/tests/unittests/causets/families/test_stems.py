"""
Unit tests for stem enumeration
"""
import unittest
from unittest import TestCase

from causets.exceptions import ResourceLimit
from causets.families.forest import CountableAntichain, DisjointChains
from causets.families.ladder import ladder_causet
from causets.families.stems import orderings, ordered_stems, stems_of_size


class StemEnumerationTests(TestCase):
    """
    Tests stems by size, ordered stems by depth and orderings of a stem
    """

    def setUp(self):
        self.ladder = ladder_causet()

    def test_ladder_stems_are_prefixes_and_skip_sets(self):
        self.assertEqual(stems_of_size(self.ladder, 3),
                         [frozenset({0, 1, 2}), frozenset({0, 1, 3})])
        self.assertEqual(stems_of_size(self.ladder, 0), [frozenset()])

    def test_chain_stems(self):
        self.assertEqual(len(stems_of_size(DisjointChains(2), 3)), 4)
        self.assertEqual(len(stems_of_size(DisjointChains(3), 2)), 6)

    def test_infinite_minimal_sets_are_refused(self):
        with self.assertRaises(ResourceLimit):
            stems_of_size(CountableAntichain(), 1)
        with self.assertRaises(ResourceLimit):
            stems_of_size(DisjointChains(3), 4, budget=5)

    def test_ordered_stems(self):
        self.assertEqual(ordered_stems(self.ladder, 2),
                         [(), (0,), (1,), (0, 1), (0, 2), (1, 0)])
        self.assertEqual(ordered_stems(CountableAntichain(), 1, branch=3),
                         [(), (0,), (1,), (2,)])
        with self.assertRaises(ResourceLimit):
            ordered_stems(self.ladder, 6, budget=10)

    def test_orderings(self):
        self.assertEqual(orderings(self.ladder, {0, 1, 2}),
                         [(0, 1, 2), (0, 2, 1), (1, 0, 2)])


if __name__ == '__main__':
    unittest.main()
