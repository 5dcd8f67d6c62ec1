"""
Unit tests for the input document schemas.
"""

import copy
import unittest

from mhskit.data.schemas import (
    HalfPlaneDocument, ProductDocument, StripDocument, UnipotentPointDocument, detect_schema, parse_descriptor,
    parse_mhs, parse_model1d, parse_reduction, schema_check,
)
from mhskit.errors import InputError

KUMMER = {
    "rank": 2,
    "weight": {"-2": [["0", "1"]], "0": [["1", "0"], ["0", "1"]]},
    "hodge": {"-1": [["1", "0"], ["0", "1"]], "0": [["1", "2+3*i"]]},
    "polarizations": {"-2": [["1"]], "0": [["1"]]},
}

MODEL = {
    "rank": 2,
    "weight": {"-2": [["0", "1"]], "0": [["1", "0"], ["0", "1"]]},
    "polarizations": {"-2": [["1"]], "0": [["1"]]},
    "nilpotent": [["0", "0"], ["1", "0"]],
    "psi": {"0": [[["1"], []]]},
}


class TestMhsSchema(unittest.TestCase):
    """Test cases for parse_mhs."""

    def setUp(self):
        self.data = copy.deepcopy(KUMMER)

    def test_valid_document(self):
        document = parse_mhs(self.data)
        self.assertEqual(document.rank, 2)
        self.assertIsNone(document.hodge_numbers)

    def test_zero_denominator(self):
        self.data["hodge"]["0"] = [["1", "1/0"]]
        with self.assertRaises(InputError) as context:
            parse_mhs(self.data)
        self.assertEqual(context.exception.path, "hodge")
        self.assertIn("Zero denominator", str(context.exception))

    def test_missing_polarization(self):
        del self.data["polarizations"]["-2"]
        with self.assertRaises(InputError) as context:
            parse_mhs(self.data)
        self.assertIn("missing polarization for the graded piece of weight -2", str(context.exception))

    def test_missing_rank(self):
        del self.data["rank"]
        with self.assertRaises(InputError) as context:
            parse_mhs(self.data)
        self.assertEqual(context.exception.path, "rank")

    def test_wrong_row_width(self):
        self.data["hodge"]["0"] = [["1", "0", "0"]]
        with self.assertRaises(InputError):
            parse_mhs(self.data)

    def test_bad_filtration_index(self):
        self.data["weight"]["zero"] = self.data["weight"].pop("0")
        with self.assertRaises(InputError):
            parse_mhs(self.data)

    def test_hodge_number_keys(self):
        self.data["hodge_numbers"] = {"0,0": 1, "-1,-1": 1}
        self.assertEqual(parse_mhs(self.data).hodge_numbers, {"0,0": 1, "-1,-1": 1})
        self.data["hodge_numbers"] = {"zero": 1}
        with self.assertRaises(InputError):
            parse_mhs(self.data)
        self.data["hodge_numbers"] = {"0,0": -1}
        with self.assertRaises(InputError):
            parse_mhs(self.data)


class TestModelSchema(unittest.TestCase):
    """Test cases for parse_model1d."""

    def setUp(self):
        self.data = copy.deepcopy(MODEL)

    def test_valid_document(self):
        document = parse_model1d(self.data)
        self.assertEqual(document.psi["0"], [[["1"], []]])
        self.assertEqual(document.spot_points, [])

    def test_empty_psi(self):
        self.data["psi"] = {}
        with self.assertRaises(InputError):
            parse_model1d(self.data)

    def test_bad_coefficient(self):
        self.data["psi"]["0"] = [[["1/0"], []]]
        with self.assertRaises(InputError):
            parse_model1d(self.data)

    def test_nilpotent_shape(self):
        self.data["nilpotent"] = [["0", "0"]]
        with self.assertRaises(InputError) as context:
            parse_model1d(self.data)
        self.assertIn("nilpotent must be 2 x 2", str(context.exception))


class TestDescriptorSchemas(unittest.TestCase):
    """Test cases for descriptor and reduction documents."""

    def test_strip_defaults(self):
        document = parse_descriptor({"kind": "strip", "offset": "0", "width": "6/5"})
        self.assertIsInstance(document, StripDocument)
        self.assertEqual(document.direction, ("0", "1"))
        self.assertEqual(document.period, "1")

    def test_product(self):
        document = parse_descriptor({"kind": "product", "bounds": [["0", "1"]], "lattice": [["1"]],
                                     "graded": {"kind": "half-plane", "epsilon": "1/20"}})
        self.assertIsInstance(document, ProductDocument)
        self.assertIsInstance(document.graded, HalfPlaneDocument)

    def test_bad_scalar_path(self):
        with self.assertRaises(InputError) as context:
            parse_descriptor({"kind": "strip", "offset": "1/0", "width": "1"})
        self.assertEqual(context.exception.path, "offset")
        with self.assertRaises(InputError) as context:
            parse_descriptor({"kind": "box", "bounds": [["0", "x"]], "lattice": [["1"]]})
        self.assertEqual(context.exception.path, "bounds.0.1")

    def test_unknown_kind(self):
        with self.assertRaises(InputError):
            parse_descriptor({"kind": "circle", "radius": "1"})

    def test_reduction(self):
        document = parse_reduction({"kind": "unipotent", "coordinates": [3.7], "lattice": [["1"]]})
        self.assertIsInstance(document, UnipotentPointDocument)
        self.assertEqual(document.coordinates, [3.7])
        self.assertEqual(parse_reduction({"kind": "sl2", "point": "3+2*i"}).point, "3+2*i")


class TestSchemaCheck(unittest.TestCase):
    """Test cases for detect_schema and schema_check."""

    def test_detection(self):
        self.assertEqual(detect_schema(KUMMER), 'mhs')
        self.assertEqual(detect_schema(MODEL), 'model1d')
        self.assertEqual(detect_schema({"kind": "strip"}), 'descriptor')
        self.assertEqual(detect_schema({"kind": "sl2"}), 'reduction')
        with self.assertRaises(InputError):
            detect_schema([1, 2])

    def test_schema_check(self):
        self.assertEqual(schema_check(KUMMER), {'ok': True, 'schema': 'mhs'})
        report = schema_check({"kind": "strip", "offset": "1/0", "width": "1"})
        self.assertFalse(report['ok'])
        self.assertEqual(report['schema'], 'descriptor')
        self.assertEqual(report['path'], "offset")
        self.assertEqual(schema_check("text")['schema'], None)


if __name__ == "__main__":
    unittest.main()
