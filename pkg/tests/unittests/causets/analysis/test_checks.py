"""
Unit tests for the consistency, order-invariance, order-Markov and rank
checkers
"""
import unittest
from fractions import Fraction
from unittest import TestCase

from hypothesis import given, settings

from causets.analysis.checks import (absence_bound_check, check_kolmogorov,
                                     check_order_invariance, check_order_markov,
                                     check_rank_monotonicity,
                                     first_place_bound_check)
from causets.exceptions import NotMaximal, UsageError
from causets.families.crossed import crossed_chains_causet
from causets.families.forest import ChainPlusPoint, DisjointChains
from causets.families.stems import ordered_stems
from causets.measures.controls import (perturbed_measure, point_mass_measure,
                                       sticky_kernel_measure)
from causets.measures.derived import derived_stem_measure
from causets.measures.flow import binary_flow, comb_flow, flow_identity_residual, mu_q
from causets.measures.ladder import ladder_measure
from causets.measures.mixture import mixture_measure
from causets.measures.urn import urn_measure
from causets.poset.finite import build_finite_poset
from tests.unittests.causets.strategies import posets_with_maximal


class MeasureChecksTests(TestCase):
    """
    Tests that genuine order-invariant measures pass every checker
    """

    def setUp(self):
        self.measures = [ladder_measure(), mu_q(Fraction(1, 3)), urn_measure(), binary_flow()]

    def test_kolmogorov(self):
        for mu in self.measures:
            report = check_kolmogorov(mu, 4)
            self.assertTrue(report.passed, mu.name)
            self.assertEqual(report.property, 'kolmogorov')
            self.assertEqual(report.witnesses, ())

    def test_order_invariance(self):
        for mu in self.measures:
            for mode in ('full', 'adjacent'):
                report = check_order_invariance(mu, 4, mode)
                self.assertTrue(report.passed, f'{mu.name} {mode}')
                self.assertEqual(report.property, f'order-invariance-{mode}')

    def test_order_markov(self):
        for mu in self.measures:
            report = check_order_markov(mu, 3)
            self.assertTrue(report.passed, mu.name)
            self.assertEqual(report.property, 'order-markov')

    def test_depth_zero(self):
        report = check_kolmogorov(ladder_measure(), 0)
        self.assertTrue(report.passed)
        self.assertEqual(report.depth, 0)

    def test_bad_mode(self):
        with self.assertRaises(UsageError):
            check_order_invariance(ladder_measure(), 2, 'diagonal')


class NegativeControlTests(TestCase):
    """
    Tests that each checker catches the measure built to break it
    """

    def test_perturbed_fails_kolmogorov(self):
        report = check_kolmogorov(perturbed_measure(ladder_measure(), (0,)), 2)
        self.assertFalse(report.passed)
        self.assertIn('()', report.witnesses)
        self.assertAlmostEqual(float(report.residual), 0.01)

    def test_point_mass_fails_order_invariance(self):
        chains = DisjointChains(2)
        mu = point_mass_measure(chains, lambda i: i, chains.contains)
        self.assertTrue(check_kolmogorov(mu, 3).passed)
        for mode in ('full', 'adjacent'):
            report = check_order_invariance(mu, 2, mode)
            self.assertFalse(report.passed)
            self.assertEqual(report.residual, 1)
            self.assertTrue(report.witnesses)

    def test_sticky_fails_order_markov(self):
        mu = sticky_kernel_measure()
        self.assertTrue(check_kolmogorov(mu, 3).passed)
        report = check_order_markov(mu, 3)
        self.assertFalse(report.passed)
        self.assertEqual(report.residual, Fraction(1, 2))
        self.assertFalse(check_order_invariance(mu, 3).passed)


class RankMonotonicityTests(TestCase):
    """
    Tests the rank distribution of maximal elements
    """

    def test_table(self):
        p = build_finite_poset(range(3), [(0, 1)])
        report = check_rank_monotonicity(p, 1)
        self.assertTrue(report.passed)
        self.assertEqual(report.table, ((1, '0'), (2, '1/3'), (3, '2/3')))
        flat = check_rank_monotonicity(p, 2)
        self.assertEqual(flat.table, ((1, '1/3'), (2, '1/3'), (3, '1/3')))

    def test_not_maximal(self):
        p = build_finite_poset(range(3), [(0, 1)])
        with self.assertRaises(NotMaximal):
            check_rank_monotonicity(p, 0)

    @settings(max_examples=40, deadline=None, derandomize=True)
    @given(posets_with_maximal())
    def test_always_monotone(self, case):
        p, x = case
        self.assertTrue(check_rank_monotonicity(p, x).passed)


class BoundChecksTests(TestCase):
    """
    Tests the absence and first-place bounds on small stems
    """

    def test_absence_bound(self):
        family = ChainPlusPoint()
        x = family.parse('x')
        report = absence_bound_check(family, x, 1, 10)
        self.assertTrue(report.passed)
        self.assertEqual(report.notes, ('1 stem(s) of size 10 contain x',))
        self.assertTrue(absence_bound_check(family, x, 3, 6).passed)

    def test_absence_bound_skips_non_maximal(self):
        family = ChainPlusPoint()
        report = absence_bound_check(family, family.parse('b1'), 1, 4)
        self.assertTrue(report.passed)
        self.assertEqual(report.notes, ('b1 is not maximal; skipped',))

    def test_absence_bound_arguments(self):
        family = ChainPlusPoint()
        with self.assertRaises(UsageError):
            absence_bound_check(family, family.parse('x'), 0, 4)
        with self.assertRaises(UsageError):
            absence_bound_check(family, family.parse('x'), 5, 4)

    def test_first_place_bound(self):
        family = crossed_chains_causet()
        c0 = family.parse('c0')
        for size in (2, 3):
            report = first_place_bound_check(family, c0, size, Fraction(1, 2))
            self.assertTrue(report.passed)
            self.assertEqual(report.notes,
                             ('largest first-place probability of c0: 1/2',))
        tight = first_place_bound_check(family, c0, 3, Fraction(1, 3))
        self.assertFalse(tight.passed)
        self.assertEqual(len(tight.witnesses), 1)
        self.assertEqual(tight.residual, Fraction(1, 6))



class MixtureChecksTests(TestCase):
    """
    Tests the checkers on finite mixtures, including ones with null stems
    """

    def test_point_mass_mixture(self):
        mu = mixture_measure([(mu_q(0), Fraction(1, 2)), (mu_q(1), Fraction(1, 2))])
        self.assertEqual(mu.prob(mu.support.parse_stem(['b1', 'c1'])), 0)
        report = check_kolmogorov(mu, 4)
        self.assertTrue(report.passed)
        self.assertEqual(report.residual, 0)
        self.assertTrue(check_order_invariance(mu, 4).passed)
        self.assertTrue(check_order_markov(mu, 3).passed)

    def test_two_coin_mixture(self):
        mu = mixture_measure([(mu_q(Fraction(1, 5)), Fraction(1, 2)),
                              (mu_q(Fraction(4, 5)), Fraction(1, 2))])
        self.assertTrue(check_kolmogorov(mu, 5).passed)
        for mode in ('full', 'adjacent'):
            self.assertTrue(check_order_invariance(mu, 5, mode).passed)

    def test_null_stem_with_mass_after_it(self):
        mu = perturbed_measure(mu_q(0), (0, 1))
        self.assertEqual(mu.prob((0,)), 0)
        report = check_kolmogorov(mu, 2)
        self.assertFalse(report.passed)
        self.assertEqual(report.witnesses, ('b1',))
        self.assertEqual(report.residual, Fraction(1, 100))


class ForestPresetTests(TestCase):
    """
    Tests flow measures on three forests to depth 8
    """

    def setUp(self):
        self.measures = [mu_q(Fraction(1, 4)), binary_flow(), comb_flow()]

    def test_kolmogorov(self):
        for mu in self.measures:
            report = check_kolmogorov(mu, 8)
            self.assertTrue(report.passed, mu.name)
            self.assertEqual(report.residual, 0)

    def test_order_invariance(self):
        for mu in self.measures:
            report = check_order_invariance(mu, 8)
            self.assertTrue(report.passed, mu.name)
            self.assertEqual(report.residual, 0)

    def test_flow_identity(self):
        for mu in self.measures:
            stems = ordered_stems(mu.support, 7)[:100]
            self.assertEqual(len(stems), 100)
            self.assertEqual(flow_identity_residual(mu, stems), 0)


class CheckerPropertiesTests(TestCase):
    """
    Tests how verdicts relate across modes and derived measures
    """

    def test_adjacent_swaps_suffice(self):
        chains = DisjointChains(2)
        measures = [ladder_measure(), mu_q(Fraction(1, 3)), urn_measure(),
                    sticky_kernel_measure(),
                    point_mass_measure(chains, lambda i: i, chains.contains)]
        for mu in measures:
            full = check_order_invariance(mu, 7, 'full')
            adjacent = check_order_invariance(mu, 7, 'adjacent')
            self.assertEqual(full.verdict, adjacent.verdict, mu.name)

    def test_derived_measures_stay_invariant(self):
        for mu in (ladder_measure(), mu_q(Fraction(1, 3)), urn_measure()):
            self.assertTrue(check_order_invariance(mu, 5).passed)
            for a in ((0,), (0, 1)):
                derived = derived_stem_measure(mu, a)
                report = check_order_invariance(derived, 5 - len(a))
                self.assertTrue(report.passed, derived.name)


if __name__ == '__main__':
    unittest.main()
