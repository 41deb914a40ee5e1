"""
Unit tests for run configs, parameter parsing and config files
"""
import json
import math
import os
import tempfile
import unittest
from fractions import Fraction
from unittest import TestCase, mock

from causets.cli.config import (RunConfig, env_seed, load_config, merge_config,
                                parse_params, parse_value)
from causets.consts import DEFAULT_SEED, SEED_ENV_VAR
from causets.exceptions import UsageError


class ParseValueTests(TestCase):
    """
    Tests that parameter values are read exactly where possible
    """

    def test_values(self):
        self.assertEqual(parse_value('3'), 3)
        self.assertIsInstance(parse_value('3'), int)
        self.assertEqual(parse_value('1/3'), Fraction(1, 3))
        self.assertEqual(parse_value('0.25'), Fraction(1, 4))
        self.assertEqual(parse_value('inf'), math.inf)
        self.assertEqual(parse_value('powers-of-two'), 'powers-of-two')
        self.assertEqual(parse_value(7), 7)

    def test_params(self):
        params = parse_params(['q=1/3', 'q-same = 1/2'])
        self.assertEqual(dict(params), {'q': Fraction(1, 3), 'q_same': Fraction(1, 2)})
        self.assertEqual(dict(parse_params({'k': '4'})), {'k': 4})
        self.assertEqual(len(parse_params(None)), 0)
        for bad in (['q'], ['=3']):
            with self.assertRaises(UsageError):
                parse_params(bad)


class RunConfigTests(TestCase):
    """
    Tests validation and defaults of RunConfig
    """

    def test_defaults(self):
        config = RunConfig.from_dict({'command': 'count', 'n': 5, 'seed': 3})
        self.assertEqual(config.family, 'ladder')
        self.assertEqual(config.exhaustion, 'prefix')
        self.assertEqual(config.n, 5)
        self.assertEqual(config.seed, 3)
        self.assertEqual(config.format, 'json')

    def test_field_forms(self):
        config = RunConfig.from_dict({'command': 'check', 'property': 'order-markov',
                                      'stem': 'b1 c1', 'k_grid': '10,20',
                                      'bound': '1/2', 'measure_params': {'q': '1/3'}})
        self.assertEqual(config.prop, 'order-markov')
        self.assertEqual(config.stem, ('b1', 'c1'))
        self.assertEqual(config.k_grid, (10, 20))
        self.assertEqual(config.bound, Fraction(1, 2))
        self.assertEqual(config.measure_params['q'], Fraction(1, 3))

    def test_invalid(self):
        bad = [{'n': 5},
               {'command': 'draw'},
               {'command': 'count', 'colour': 'red'},
               {'command': 'count', 'n': 0},
               {'command': 'count', 'depth': -1},
               {'command': 'count', 'n': True},
               {'command': 'limit', 'n_min': 5, 'n_max': 4},
               {'command': 'limit', 'tol': -0.1},
               {'command': 'check', 'k_grid': '0,5'},
               {'command': 'check', 'k_grid': 'a,b'},
               {'command': 'count', 'format': 'xml'}]
        for values in bad:
            with self.assertRaises(UsageError, msg=str(values)):
                RunConfig.from_dict(values)

    def test_to_record(self):
        config = RunConfig.from_dict({'command': 'eval', 'stem': ['a1'], 'seed': 0,
                                      'measure_params': {'q': '1/3'}})
        record = config.to_record()
        self.assertEqual(record['stem'], ['a1'])
        self.assertEqual(record['measure_params'], {'q': '1/3'})
        self.assertIsNone(record['bound'])
        json.dumps(record)


class SeedTests(TestCase):
    """
    Tests the seed taken from the environment
    """

    def test_env_seed(self):
        with mock.patch.dict(os.environ, {SEED_ENV_VAR: '17'}):
            self.assertEqual(env_seed(), 17)
            self.assertEqual(RunConfig.from_dict({'command': 'simulate'}).seed, 17)
            self.assertEqual(RunConfig.from_dict({'command': 'simulate',
                                                  'seed': 2}).seed, 2)

    def test_default_seed(self):
        with mock.patch.dict(os.environ, {SEED_ENV_VAR: ''}):
            self.assertEqual(env_seed(), DEFAULT_SEED)

    def test_bad_env_seed(self):
        with mock.patch.dict(os.environ, {SEED_ENV_VAR: 'seven'}):
            with self.assertRaises(UsageError):
                env_seed()


class ConfigFileTests(TestCase):
    """
    Tests config files and their merge with flags
    """

    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.folder.cleanup()

    def write(self, name, text):
        path = os.path.join(self.folder.name, name)
        with open(path, 'w') as writer:
            writer.write(text)
        return path

    def test_load_and_merge(self):
        path = self.write('run.json', json.dumps({'command': 'count', 'n': 6,
                                                  'family': 'chains', 'seed': 1}))
        values = load_config(path)
        self.assertEqual(merge_config(values, {'n': None}).n, 6)
        merged = merge_config(values, {'n': 7, 'family': None})
        self.assertEqual((merged.n, merged.family), (7, 'chains'))

    def test_bad_files(self):
        with self.assertRaises(UsageError):
            load_config(self.write('list.json', '[1, 2]'))
        with self.assertRaises(UsageError):
            load_config(self.write('broken.json', '{"command": '))
        with self.assertRaises(UsageError):
            load_config(os.path.join(self.folder.name, 'absent.json'))


if __name__ == '__main__':
    unittest.main()
