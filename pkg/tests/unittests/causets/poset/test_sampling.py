"""
Unit tests for uniform sampling and enumeration of linear extensions
"""
import math
import unittest
from collections import Counter
from unittest import TestCase

from hypothesis import given, settings

from causets.exceptions import CapExceeded
from causets.poset.finite import antichain, build_finite_poset
from causets.poset.sampling import enumerate_extensions, sample_uniform_extension
from causets.seeding import make_rng
from tests.unittests.causets.strategies import brute_force_extensions, finite_posets


class EnumerateExtensionsTests(TestCase):
    """
    Tests that enumeration lists every extension once in lexicographic order
    and respects its cap
    """

    @settings(max_examples=50, deadline=None, derandomize=True)
    @given(finite_posets())
    def test_matches_brute_force(self, p):
        self.assertEqual(enumerate_extensions(p), sorted(brute_force_extensions(p)))

    def test_cap(self):
        with self.assertRaises(CapExceeded) as ctx:
            enumerate_extensions(antichain(5), cap=100)
        self.assertEqual(ctx.exception.count, 120)


class SampleUniformExtensionTests(TestCase):
    """
    Tests that sampled extensions are valid, reproducible per seed and
    uniform within a 5 sigma band
    """

    def setUp(self):
        self.p = build_finite_poset(range(4), [(0, 1), (2, 3)])

    def test_deterministic_per_seed(self):
        self.assertEqual(sample_uniform_extension(self.p, 7),
                         sample_uniform_extension(self.p, 7))

    def test_samples_are_extensions(self):
        rng = make_rng(3)
        for _ in range(50):
            self.assertTrue(self.p.is_stem(sample_uniform_extension(self.p, rng)))

    def test_uniform(self):
        orders = enumerate_extensions(self.p)
        self.assertEqual(len(orders), 6)
        rng = make_rng(11)
        draws = 6000
        counts = Counter(sample_uniform_extension(self.p, rng) for _ in range(draws))
        expected = draws / len(orders)
        band = 5 * math.sqrt(draws * (1 / 6) * (5 / 6))
        for order in orders:
            self.assertLess(abs(counts[order] - expected), band)


if __name__ == '__main__':
    unittest.main()
