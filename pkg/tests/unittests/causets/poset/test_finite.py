"""
Unit tests for finite posets
"""
import unittest
from unittest import TestCase

from hypothesis import given, settings

from causets.exceptions import (CycleDetected, NotADownSet, NotAnOrderedStem,
                                UnknownElement)
from causets.poset.finite import (FinitePoset, antichain, build_finite_poset,
                                  chain, minimal_after)
from tests.unittests.causets.strategies import finite_posets


class BuildFinitePosetTests(TestCase):
    """
    Tests that posets built from covers carry the transitive closure, drop
    redundant covers with a warning and refuse cycles and unknown elements
    """

    def test_closure_of_covers(self):
        p = build_finite_poset([0, 1, 2], [(0, 1), (1, 2)])
        self.assertTrue(p.less(0, 2))
        self.assertFalse(p.less(2, 0))
        self.assertEqual(p.down(2), frozenset({0, 1}))
        self.assertEqual(p.up(0), frozenset({1, 2}))

    def test_redundant_cover_is_dropped(self):
        with self.assertLogs('causets.poset.finite', level='WARNING'):
            p = build_finite_poset([0, 1, 2], [(0, 1), (1, 2), (0, 2)])
        self.assertEqual(p.covers, ((0, 1), (1, 2)))

    def test_cycle_is_refused(self):
        with self.assertRaises(CycleDetected) as ctx:
            build_finite_poset([0, 1], [(0, 1), (1, 0)])
        self.assertEqual(ctx.exception.cycle[0], ctx.exception.cycle[-1])

    def test_self_cover_is_a_cycle(self):
        with self.assertRaises(CycleDetected):
            build_finite_poset([0], [(0, 0)])

    def test_unknown_cover_element(self):
        with self.assertRaises(UnknownElement):
            build_finite_poset([0, 1], [(0, 5)])

    def test_non_integer_elements(self):
        with self.assertRaises(TypeError):
            build_finite_poset(['a', 'b'], [])

    def test_empty_poset(self):
        p = build_finite_poset([], [])
        self.assertEqual(p.n, 0)
        self.assertEqual(p.canonical_extension(), ())

    def test_labels_and_names(self):
        p = build_finite_poset([0, 1], [(0, 1)], {0: 'a', 1: 'x'})
        self.assertEqual(p.name(0), 'a')
        self.assertEqual(p.restrict([1]).name(1), 'x')

    def test_equality_ignores_labels(self):
        self.assertEqual(chain(3), build_finite_poset(range(3), [(0, 1), (1, 2)], {0: 'a'}))
        self.assertNotEqual(chain(3), antichain(3))
        self.assertEqual(hash(chain(3)), hash(chain(3)))

    @settings(max_examples=50, deadline=None, derandomize=True)
    @given(finite_posets())
    def test_from_down_sets_round_trip(self, p):
        rebuilt = FinitePoset.from_down_sets({x: p.down(x) for x in p})
        self.assertEqual(rebuilt, p)
        self.assertEqual(build_finite_poset(p.elements, p.covers), p)


class FinitePosetStemTests(TestCase):
    """
    Tests down-set and ordered stem validation, minimal elements after a
    down-set and restrictions
    """

    def setUp(self):
        # a < x, b isolated
        self.p = build_finite_poset([0, 1, 2], [(0, 1)], {0: 'a', 1: 'x', 2: 'b'})

    def test_down_set(self):
        self.assertTrue(self.p.is_down_set([0]))
        self.assertFalse(self.p.is_down_set([1]))
        with self.assertRaises(NotADownSet) as ctx:
            self.p.check_down_set([1, 2])
        self.assertEqual(ctx.exception.missing, 0)

    def test_ordered_stem(self):
        self.assertTrue(self.p.is_stem([2, 0, 1]))
        self.assertTrue(self.p.is_stem([]))
        self.assertFalse(self.p.is_stem([1, 0]))
        with self.assertRaises(NotAnOrderedStem) as ctx:
            self.p.check_stem([0, 0])
        self.assertEqual(ctx.exception.position, 1)

    def test_unknown_element_in_stem(self):
        with self.assertRaises(NotAnOrderedStem):
            self.p.check_stem([7])

    def test_minimal_after(self):
        self.assertEqual(minimal_after(self.p, []), frozenset({0, 2}))
        self.assertEqual(minimal_after(self.p, [0]), frozenset({1, 2}))
        with self.assertRaises(NotADownSet):
            minimal_after(self.p, [1])

    def test_maximal_and_minimal(self):
        self.assertEqual(self.p.maximal(), (1, 2))
        self.assertEqual(self.p.minimal(), (0, 2))
        self.assertTrue(self.p.is_maximal(2))
        self.assertFalse(self.p.is_maximal(0))

    def test_restrict_and_without(self):
        q = self.p.without([2])
        self.assertEqual(q, chain(2))
        self.assertEqual(self.p.restrict([0, 2]).covers, ())

    def test_canonical_extension_is_a_stem(self):
        order = self.p.canonical_extension()
        self.assertEqual(order, (0, 1, 2))
        self.assertTrue(self.p.is_stem(order))

    def test_record(self):
        record = self.p.to_record()
        self.assertEqual(record['covers'], [[0, 1]])
        self.assertEqual(record['labels'], {'0': 'a', '1': 'x', '2': 'b'})

    def test_unknown_position(self):
        with self.assertRaises(UnknownElement):
            self.p.position(9)


if __name__ == '__main__':
    unittest.main()
