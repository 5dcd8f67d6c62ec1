"""
Unit tests for membership in the mixed period domain and its real-split locus.
"""

import unittest

from mhskit.domains.period_domain import PeriodDomainSpec, membership, real_split_coordinates
from mhskit.errors import StructureError
from mhskit.hodge.constructions import kummer
from mhskit.hodge.structure import GradedPolarization, HodgeNumbers
from mhskit.linalg.filtration import DecreasingFiltration, IncreasingFiltration
from mhskit.linalg.matrix import Matrix
from mhskit.splittings.retraction import delta_retract


class TestPeriodDomain(unittest.TestCase):
    """Test cases for membership and the real-split coordinates."""

    def setUp(self):
        self.weight = IncreasingFiltration(2, {-2: [[0, 1]], 0: [[1, 0], [0, 1]]})
        self.spec = PeriodDomainSpec(2, self.weight, HodgeNumbers({(-1, -1): 1, (0, 0): 1}),
                                     GradedPolarization({-2: Matrix([[1]]), 0: Matrix([[1]])}))

    def test_hodge_ranks(self):
        self.assertEqual(self.spec.hodge_ranks(0), {0: 1, 1: 0})
        self.assertEqual(self.spec.hodge_ranks(-2), {-1: 1, 0: 0})
        self.assertEqual(self.spec.hodge_ranks(5), {})

    def test_inconsistent_hodge_numbers(self):
        with self.assertRaises(StructureError):
            PeriodDomainSpec(2, self.weight, HodgeNumbers({(0, 0): 2}), GradedPolarization({0: Matrix.identity(2)}))

    def test_real_split_point(self):
        report = membership(self.spec, kummer("1/2").hodge)
        self.assertTrue(report.in_compact_dual)
        self.assertTrue(report.in_M)
        self.assertTrue(report.in_M_R)
        self.assertEqual(report.failures, [])

    def test_non_split_point(self):
        report = membership(self.spec, kummer("1/2+i").hodge)
        self.assertTrue(report.in_M)
        self.assertFalse(report.in_M_R)
        self.assertEqual(report.to_dict()['failures'], ["not split over R"])

    def test_outside_the_compact_dual(self):
        hodge = DecreasingFiltration(2, {-1: [[1, 0], [0, 1]], 0: [[0, 1]]})
        report = membership(self.spec, hodge)
        self.assertFalse(report.in_compact_dual)
        self.assertFalse(report.in_M)
        self.assertFalse(report.in_M_R)
        self.assertIn("dim F^0 Gr_0 is 0, expected 1", report.failures)

    def test_dimension_mismatch(self):
        with self.assertRaises(StructureError):
            membership(self.spec, DecreasingFiltration.trivial(3, 0))

    def test_real_split_coordinates(self):
        point = real_split_coordinates(self.spec, kummer("1/2").hodge)
        self.assertEqual(point, delta_retract(kummer("1/2")))
        with self.assertRaises(StructureError):
            real_split_coordinates(self.spec, kummer("i").hodge)


if __name__ == "__main__":
    unittest.main()
