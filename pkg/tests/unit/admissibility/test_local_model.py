"""
Unit tests for one-variable local models and the pre-admissibility verdict.
"""

import unittest

import numpy as np

from mhskit.admissibility.local_model import (
    LocalModel1D, Polynomial, evaluate_period_map, evaluate_period_map_float, exact_filtration,
    lifted_structure, untwist,
)
from mhskit.admissibility.preadmissible import check_orbit_transversality, check_preadmissible
from mhskit.errors import StructureError
from mhskit.hodge.constructions import kummer
from mhskit.hodge.structure import GradedPolarization
from mhskit.linalg.filtration import DecreasingFiltration, IncreasingFiltration
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import GaussianRational
from mhskit.linalg.subspace import Subspace
from mhskit.monodromy.nilpotent import NilpotentOperator

ONE, NIL = Polynomial(["1"]), Polynomial()
KUMMER_WEIGHT = IncreasingFiltration(2, {-2: [[0, 1]], 0: [[1, 0], [0, 1]]})
POLARIZATIONS = GradedPolarization({-2: Matrix([[1]]), 0: Matrix([[1]])})


def kummer_model() -> LocalModel1D:
    """F^0(q) = <e0> twisted by N e0 = e1: the Kummer variation K(z)."""
    psi = {-1: [[ONE, NIL], [NIL, ONE]], 0: [[ONE, NIL]]}
    return LocalModel1D(2, KUMMER_WEIGHT, NilpotentOperator([[0, 0], [1, 0]]), psi, POLARIZATIONS)


def exp_model() -> LocalModel1D:
    """Trivial monodromy, F^0(q) = <q e0 + e1>: collapses onto W_-2 at q = 0."""
    psi = {-1: [[ONE, NIL], [NIL, ONE]], 0: [[Polynomial(["0", "1"]), ONE]]}
    return LocalModel1D(2, KUMMER_WEIGHT, NilpotentOperator(Matrix.zeros(2, 2)), psi, POLARIZATIONS)


class TestPolynomial(unittest.TestCase):
    """Test cases for the Polynomial class."""

    def test_trailing_zeros_dropped(self):
        self.assertEqual(Polynomial(["1", "0", "0"]).degree, 0)
        self.assertEqual(Polynomial(["0"]).degree, -1)
        self.assertTrue(Polynomial().is_zero())

    def test_evaluation(self):
        p = Polynomial(["1", "0", "2"])
        self.assertEqual(p("1/2"), GaussianRational("3/2"))
        self.assertEqual(p(3), 19)
        self.assertAlmostEqual(p.evaluate_float(0.5 + 0j), 1.5 + 0j)
        self.assertEqual(NIL.evaluate_float(2j), 0j)

    def test_strings(self):
        self.assertEqual(Polynomial(["1/2", "i"]).to_strings(), ["1/2", "0+1*i"])


class TestLocalModel(unittest.TestCase):
    """Test cases for LocalModel1D and period map evaluation."""

    def setUp(self):
        self.model = kummer_model()

    def test_degree(self):
        self.assertEqual(self.model.degree, 0)
        self.assertEqual(exp_model().degree, 1)

    def test_psi_at(self):
        self.assertEqual(self.model.psi_at(0)[0], Subspace.coordinate(2, [0]))
        self.assertEqual(exp_model().psi_at(0)[0], Subspace.coordinate(2, [1]))

    def test_exact_evaluation(self):
        hodge = evaluate_period_map(self.model, "1/2", "i")
        self.assertEqual(hodge, kummer("i").hodge)
        wound = evaluate_period_map(self.model, "1/2", "i", winding=1)
        self.assertEqual(wound, kummer("1+i").hodge)

    def test_untwist(self):
        hodge = evaluate_period_map(self.model, "1/2", "i")
        self.assertEqual(untwist(self.model, hodge, "i"), self.model.psi_at("1/2"))

    def test_inconsistent_branch(self):
        with self.assertRaises(StructureError):
            evaluate_period_map(self.model, "1/2", "-i")
        with self.assertRaises(StructureError):
            evaluate_period_map(self.model, 0, "i")

    def test_spot_check(self):
        checks = self.model.spot_check([("1/2", "i"), ("1/3", "1/4+i")])
        self.assertTrue(all(c.ok for c in checks))
        self.assertTrue(checks[0].to_dict()['polarization']['polarized'])
        self.assertEqual(checks[1].to_dict()['branch'], "1/4+1*i")

    def test_float_evaluation(self):
        values = evaluate_period_map_float(self.model, 0.25 + 1j)
        np.testing.assert_allclose(values[0], np.array([[1, 0.25 + 1j]]))
        with self.assertRaises(StructureError):
            evaluate_period_map_float(self.model, 0.25 - 1j)

    def test_exact_filtration(self):
        hodge = exact_filtration(2, {0: np.array([[1, 0.5 + 1j]])})
        self.assertEqual(hodge[0], Subspace.span([[1, "1/2+i"]], 2))

    def test_lifted_structure(self):
        mhs = lifted_structure(self.model, 0.5 + 2j)
        self.assertEqual(mhs.hodge, kummer("1/2+2*i").hodge)

    def test_model_validation(self):
        psi = {0: [[ONE, NIL]]}
        with self.assertRaises(StructureError):
            LocalModel1D(2, KUMMER_WEIGHT, NilpotentOperator([[0, 0], [1, 0]]), {})
        with self.assertRaises(StructureError):
            LocalModel1D(2, KUMMER_WEIGHT, NilpotentOperator([[0, 0], [1, 0]]), {0: [[ONE]]})
        with self.assertRaises(StructureError):
            LocalModel1D(2, KUMMER_WEIGHT, NilpotentOperator([[0, 1], [0, 0]]), psi)
        with self.assertRaises(StructureError):
            LocalModel1D(2, KUMMER_WEIGHT, NilpotentOperator([[0, 0], ["1/2", 0]]), psi)


class TestPreadmissible(unittest.TestCase):
    """Test cases for check_preadmissible."""

    def test_kummer_model(self):
        verdict = check_preadmissible(kummer_model())
        self.assertTrue(verdict.cond1)
        self.assertTrue(verdict.cond2)
        self.assertTrue(verdict.preadmissible)
        self.assertEqual(verdict.failures, [])

    def test_collapsing_hodge_bundle(self):
        verdict = check_preadmissible(exp_model())
        self.assertTrue(verdict.cond1)
        self.assertFalse(verdict.cond2)
        self.assertEqual(verdict.graded_ranks[(0, -2)], (0, 1))
        details = verdict.to_dict()['details']
        self.assertEqual(details['graded_ranks']["0,-2"], {'generic': 0, 'at_zero': 1})

    def test_missing_relative_weight_filtration(self):
        weight = IncreasingFiltration(2, {-1: [[0, 1]], 0: [[1, 0], [0, 1]]})
        model = LocalModel1D(2, weight, NilpotentOperator([[0, 0], [1, 0]]), {0: [[ONE, NIL], [NIL, ONE]]})
        verdict = check_preadmissible(model)
        self.assertFalse(verdict.cond1)
        self.assertTrue(verdict.cond2)
        self.assertFalse(verdict.preadmissible)
        self.assertTrue(verdict.failures[0].startswith("cond1:"))
        self.assertIn("no lift", verdict.failures[0])

    def test_orbit_transversality(self):
        n = NilpotentOperator([[0, 0], [1, 0]])
        self.assertTrue(check_orbit_transversality(kummer_model().psi_at(0), n))
        hodge = DecreasingFiltration(3, {-1: Subspace.full(3), 0: [[1, 0, 0], [0, 1, 0]], 1: [[1, 0, 0]]})
        self.assertFalse(check_orbit_transversality(hodge, NilpotentOperator([[0, 0, 0], [0, 0, 0], [1, 0, 0]])))


if __name__ == "__main__":
    unittest.main()
