"""
Unit tests for the Report Converter module.
"""

import json
import unittest
from fractions import Fraction

import pandas as pd

from mhskit.data.report_converter import ReportConverter
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import GaussianRational
from mhskit.loci.enumeration import HodgeClass


class Report:
    def to_dict(self):
        return {'value': Fraction(1, 3), 'ok': True}


class TestReportConverter(unittest.TestCase):
    """Test cases for the ReportConverter class."""

    def setUp(self):
        """Set up test fixtures."""
        self.converter = ReportConverter(significant_digits=6)

    def test_scalars(self):
        self.assertEqual(self.converter.to_data(Fraction(1, 2)), "1/2")
        self.assertEqual(self.converter.to_data(GaussianRational(2, 3)), "2+3*i")
        self.assertEqual(self.converter.to_data(1 / 3), 0.333333)
        self.assertEqual(self.converter.to_data(float("inf")), "inf")
        self.assertIsNone(self.converter.to_data(None))
        self.assertIs(self.converter.to_data(True), True)

    def test_containers(self):
        data = self.converter.to_data({1: [Matrix([[1, "i"]]), (Fraction(2), "x")], 'report': Report()})
        self.assertEqual(data, {'1': [[["1", "0+1*i"]], ["2", "x"]], 'report': {'value': "1/3", 'ok': True}})

    def test_unsupported_type(self):
        with self.assertRaises(TypeError):
            self.converter.to_data({1, 2})

    def test_to_json(self):
        text = self.converter.to_json({'b': 1, 'a': Fraction(1, 2)})
        self.assertEqual(text, '{\n  "a": "1/2",\n  "b": 1\n}')
        self.assertEqual(json.loads(text), {'a': "1/2", 'b': 1})

    def test_records(self):
        records = [{'height': 1.0, 'sup_norm': Fraction(3, 4)}, {'height': 2.0, 'sup_norm': Fraction(1, 2)}]
        df = self.converter.records_to_dataframe(records)
        self.assertEqual(list(df.columns), ['height', 'sup_norm'])
        self.assertEqual(list(df['sup_norm']), ["3/4", "1/2"])
        self.assertEqual(self.converter.dataframe_to_records(df),
                         [{'height': 1.0, 'sup_norm': "3/4"}, {'height': 2.0, 'sup_norm': "1/2"}])
        self.assertTrue(self.converter.records_to_dataframe([]).empty)

    def test_hodge_classes_frame(self):
        classes = [HodgeClass((1, 0), Fraction(1)), HodgeClass((0, -1), Fraction(1))]
        df = self.converter.hodge_classes_frame(classes)
        expected = pd.DataFrame({'v0': [1, 0], 'v1': [0, -1], 'norm': ["1", "1"]})
        pd.testing.assert_frame_equal(df, expected)


if __name__ == "__main__":
    unittest.main()
