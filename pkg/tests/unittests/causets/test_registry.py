"""
Unit tests for preset registries
"""
import unittest
from unittest import TestCase
from unittest.mock import MagicMock

from causets.exceptions import UnknownPreset, UsageError
from causets.families.presets import FAMILIES
from causets.measures.presets import MEASURES
from causets.registry import PresetRegistry


class PresetRegistryTests(TestCase):
    """
    Tests registration, lookup, parameter overlays, combination and logging
    of preset registries
    """

    def setUp(self):
        self.registry = PresetRegistry('widget')
        self.factory = MagicMock(return_value='built')
        self.registry.register('plain', self.factory, 'a widget', size=2)

    def test_create_overlays_defaults(self):
        self.assertEqual(self.registry.create('plain', size=3), 'built')
        self.factory.assert_called_once_with(size=3)

    def test_unknown_parameter(self):
        with self.assertRaises(UsageError):
            self.registry.create('plain', colour='red')

    def test_unknown_preset(self):
        with self.assertRaises(UnknownPreset) as ctx:
            self.registry['missing']
        self.assertEqual(ctx.exception.name, 'missing')

    def test_duplicates_are_refused(self):
        with self.assertRaises(ValueError):
            self.registry.register('plain', self.factory)

    def test_registration_logs(self):
        with self.assertLogs('PresetRegistry[widget]', level='INFO'):
            self.registry.register('other', self.factory)

    def test_decorator_form(self):
        @self.registry.preset('decorated', 'made by a decorator', n=1)
        def decorated(n):
            return n * 10
        self.assertEqual(self.registry.create('decorated'), 10)
        self.assertIn('decorated', self.registry)

    def test_add_and_sub(self):
        other = PresetRegistry('widget')
        other.register('extra', self.factory)
        combined = self.registry + other
        self.assertEqual(list(combined), ['extra', 'plain'])
        self.assertEqual(list(combined - other), ['plain'])
        with self.assertRaises(ValueError):
            self.registry + PresetRegistry('gadget')
        with self.assertRaises(TypeError):
            self.registry + {}
        with self.assertRaises(ValueError):
            combined + other

    def test_params_are_frozen(self):
        params = self.registry.params('plain')
        with self.assertRaises(TypeError):
            params['size'] = 5


class BuiltinPresetTests(TestCase):
    """
    Tests that the shipped family and measure presets build
    """

    def test_families_build(self):
        for name in ('ladder', 'chains', 'single-chain', 'linear-sum', 'binary', 'comb',
                     'antichain', 'chain-point', 'tree', 'grid', 'oscillating', 'crossed'):
            self.assertEqual(FAMILIES.create(name).enumerate(3), (0, 1, 2))

    def test_measures_build(self):
        for name in MEASURES:
            mu = MEASURES.create(name)
            self.assertEqual(mu.prob(()), 1)

    def test_bad_probability(self):
        with self.assertRaises(UsageError):
            MEASURES.create('mu-q', q='3/2')
        with self.assertRaises(UsageError):
            MEASURES.create('urn', alpha=0)


if __name__ == '__main__':
    unittest.main()
