"""
Unit tests for uniform measures on Young diagrams of the grid
"""
import unittest
from fractions import Fraction
from unittest import TestCase

from causets.exceptions import NotAYoungDiagram
from causets.families.grid import cell_id, grid_causet
from causets.families.stems import ordered_stems
from causets.measures.grid import (diagram_ids, grid_finite_nu, hook_count, skew_count,
                                   young_diagrams)
from causets.poset.counting import count_linear_extensions, count_with_prefix, nu_uniform


class HookCountTests(TestCase):
    """
    Tests the hook length formula and Aitken's determinant against the
    down-set counting of the same restrictions
    """

    def setUp(self):
        self.grid = grid_causet()

    def test_small_shapes(self):
        self.assertEqual(hook_count((2, 2)), 2)
        self.assertEqual(hook_count((3, 2)), 5)
        self.assertEqual(hook_count((1, 1, 1)), 1)
        self.assertEqual(hook_count(()), 1)
        self.assertEqual(hook_count([(0, 0), (0, 1), (1, 0)]), 2)

    def test_young_diagrams(self):
        self.assertEqual(young_diagrams(4), [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
        self.assertEqual([len(young_diagrams(n)) for n in range(1, 9)],
                         [1, 2, 3, 5, 7, 11, 15, 22])

    def test_hook_matches_counting(self):
        for n in range(1, 9):
            for shape in young_diagrams(n):
                p = self.grid.restrict(diagram_ids(shape))
                self.assertEqual(count_linear_extensions(p), hook_count(shape))

    def test_skew_matches_counting(self):
        for shape in young_diagrams(6):
            p = self.grid.restrict(diagram_ids(shape))
            for inner in young_diagrams(2) + young_diagrams(3):
                if len(inner) > len(shape) or any(m > r for r, m in zip(shape, inner)):
                    continue
                seq = tuple(sorted(diagram_ids(inner)))
                self.assertEqual(skew_count(shape, inner), count_with_prefix(p, seq))

    def test_skew_outside(self):
        with self.assertRaises(NotAYoungDiagram):
            skew_count((2,), (1, 1))


class GridNuTests(TestCase):
    """
    Tests probabilities of ordered stems in uniform extensions of diagrams
    """

    def test_square(self):
        stem = (cell_id(0, 0), cell_id(1, 0))
        self.assertEqual(grid_finite_nu((2, 2), stem), Fraction(1, 2))
        self.assertEqual(grid_finite_nu((3, 3, 3), stem), Fraction(1, 2))
        self.assertEqual(grid_finite_nu((3, 3), stem), Fraction(2, 5))

    def test_matches_counting(self):
        grid = grid_causet()
        shape = (3, 2, 1)
        p = grid.restrict(diagram_ids(shape))
        ids = diagram_ids(shape)
        for seq in ordered_stems(grid, 3):
            if set(seq) <= ids:
                self.assertEqual(grid_finite_nu(shape, seq), nu_uniform(p, seq))

    def test_stem_outside_shape(self):
        with self.assertRaises(NotAYoungDiagram):
            grid_finite_nu((1,), (cell_id(0, 0), cell_id(1, 0)))
        with self.assertRaises(NotAYoungDiagram):
            grid_finite_nu((1, 2), ())


if __name__ == '__main__':
    unittest.main()
