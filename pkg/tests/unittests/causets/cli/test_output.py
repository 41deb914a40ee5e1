"""
Unit tests for JSON and CSV rendering of results
"""
import io
import json
import os
import tempfile
import unittest
from fractions import Fraction
from unittest import TestCase

from causets.analysis.report import CheckReport
from causets.cli.output import as_record, emit, to_csv, write_output
from causets.exact import PHI
from causets.exceptions import UsageError


class EmitTests(TestCase):
    """
    Tests that every result renders to stable text
    """

    def test_exact_values(self):
        self.assertEqual(json.loads(emit(Fraction(1, 3))), {'num': '1', 'den': '3'})
        self.assertEqual(json.loads(emit(PHI))['surd'], 5)
        self.assertEqual(as_record(0.5), {'float': '0.5'})

    def test_sorted_keys(self):
        text = emit({'b': 1, 'a': 2})
        self.assertEqual(text, '{\n  "a": 2,\n  "b": 1\n}\n')
        self.assertEqual(text, emit({'a': 2, 'b': 1}))

    def test_report(self):
        record = json.loads(emit(CheckReport('kolmogorov', 3)))
        self.assertEqual(record['verdict'], 'pass')
        self.assertEqual(record['residual_num'], '0')

    def test_csv(self):
        record = {'b': 1, 'a': [1, 2], 'flag': True, 'none': None,
                  'rows': [{'n': 1, 'value': 0.5}, {'n': 2, 'value': None}]}
        self.assertEqual(to_csv(record),
                         'a,"[1,2]"\nb,1\nflag,true\nnone,\n\nn,value\n1,0.5\n2,\n')
        self.assertEqual(emit(record, 'csv'), to_csv(record))

    def test_csv_table(self):
        text = emit(CheckReport('rank-monotonicity', 2, table=[(1, '1/2'), (2, '1/2')]), 'csv')
        self.assertTrue(text.endswith('\n1,1/2\n2,1/2\n'))
        self.assertIn('verdict,pass\n', text)

    def test_errors(self):
        with self.assertRaises(UsageError):
            emit({'a': 1}, 'xml')
        with self.assertRaises(TypeError):
            as_record(object())


class WriteOutputTests(TestCase):
    """
    Tests writing to a stream or to a file
    """

    def test_stream(self):
        stream = io.StringIO()
        write_output('text\n', None, stream)
        self.assertEqual(stream.getvalue(), 'text\n')

    def test_file(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, 'out.json')
            write_output('{}\n', path)
            with open(path, 'r') as reader:
                self.assertEqual(reader.read(), '{}\n')
            with self.assertRaises(UsageError):
                write_output('{}\n', os.path.join(folder, 'missing', 'out.json'))


if __name__ == '__main__':
    unittest.main()
