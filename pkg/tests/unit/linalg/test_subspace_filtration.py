"""
Unit tests for subspaces, filtrations and graded pieces.
"""

import unittest

from hypothesis import given, strategies as st

from mhskit.errors import StructureError
from mhskit.linalg import conjugate, intersect, quotient_image, sum_subspaces
from mhskit.linalg.filtration import (
    DecreasingFiltration, GradedPiece, IncreasingFiltration, filtration_from_rows,
)
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.operators import OperatorSpace
from mhskit.linalg.scalars import I
from mhskit.linalg.subspace import Subspace

vectors3 = st.lists(st.lists(st.integers(min_value=-3, max_value=3), min_size=3, max_size=3), max_size=3)


class TestSubspace(unittest.TestCase):
    """Test cases for the Subspace class."""

    def test_canonical_basis(self):
        a = Subspace.span([[1, 1], [2, 2]], 2)
        b = Subspace.span([[3, 3]], 2)
        self.assertEqual(a.dim, 1)
        self.assertEqual(a, b)

    def test_sum_and_intersection(self):
        a = Subspace.coordinate(3, [0, 1])
        b = Subspace.coordinate(3, [1, 2])
        self.assertTrue(sum_subspaces(a, b).is_full())
        self.assertEqual(intersect(a, b), Subspace.coordinate(3, [1]))

    def test_intersection_with_zero(self):
        self.assertTrue(intersect(Subspace.full(2), Subspace.zero(2)).is_zero())

    def test_conjugation(self):
        line = Subspace.span([[1, I]], 2)
        self.assertEqual(conjugate(line), Subspace.span([[1, -I]], 2))
        self.assertFalse(line.is_real())
        self.assertTrue(line.real_part().is_zero())
        self.assertTrue(line.sum(conjugate(line)).is_real())

    def test_contains_and_coordinates(self):
        plane = Subspace.span([[1, 0, 1], [0, 1, 1]], 3)
        self.assertTrue(plane.contains([2, 3, 5]))
        self.assertFalse(plane.contains([0, 0, 1]))
        self.assertEqual(plane.coordinates([2, 3, 5]), [2, 3])
        self.assertIsNone(plane.coordinates([0, 0, 1]))

    def test_quotient_image(self):
        image = quotient_image(Subspace.coordinate(3, [0, 1]), Subspace.coordinate(3, [0]))
        self.assertEqual(image.ambient_dim, 2)
        self.assertEqual(image.dim, 1)

    def test_preimage(self):
        n = Matrix([[0, 0], [1, 0]])
        self.assertEqual(Subspace.zero(2).preimage(n), Subspace.coordinate(2, [1]))

    def test_ambient_mismatch(self):
        with self.assertRaises(StructureError):
            Subspace.full(2).sum(Subspace.full(3))

    @given(vectors3, vectors3)
    def test_dimension_formula(self, u, v):
        a, b = Subspace.span(u, 3), Subspace.span(v, 3)
        self.assertEqual(a.sum(b).dim + a.intersect(b).dim, a.dim + b.dim)
        self.assertTrue(a.intersect(b) <= a)
        self.assertTrue(a <= a.sum(b))


class TestFiltrations(unittest.TestCase):
    """Test cases for increasing and decreasing filtrations."""

    def test_increasing_completion(self):
        weight = IncreasingFiltration(2, {0: [[1, 0]]})
        self.assertEqual(weight.indices, [0, 1])
        self.assertTrue(weight[7].is_full())
        self.assertTrue(weight[-1].is_zero())
        self.assertEqual(weight.graded_dimensions(), {0: 1, 1: 1})

    def test_not_nested(self):
        with self.assertRaises(StructureError):
            IncreasingFiltration(2, {0: [[1, 0]], 1: [[0, 1]]})
        with self.assertRaises(StructureError):
            DecreasingFiltration(2, {0: [[1, 0]], 1: [[0, 1]]})

    def test_decreasing_completion(self):
        hodge = DecreasingFiltration(2, {1: [[1, 0]]})
        self.assertEqual(hodge.indices, [0, 1])
        self.assertTrue(hodge[-3].is_full())
        self.assertTrue(hodge[2].is_zero())
        self.assertEqual(hodge[1], Subspace.coordinate(2, [0]))

    def test_repeated_steps_are_dropped(self):
        weight = IncreasingFiltration(2, {-2: [[1, 0]], -1: [[1, 0]], 0: [[1, 0], [0, 1]]})
        self.assertEqual(weight.indices, [-2, 0])

    def test_shifted(self):
        weight = IncreasingFiltration.trivial(2, 1).shifted(2)
        self.assertEqual(weight.indices, [3])

    def test_from_rows(self):
        hodge = filtration_from_rows("hodge", 2, {"0": [["1", "i"]], "1": []})
        self.assertEqual(hodge[0].dim, 1)
        with self.assertRaises(StructureError):
            filtration_from_rows("sideways", 2, {})

    def test_graded_piece(self):
        piece = GradedPiece(Subspace.full(2), Subspace.coordinate(2, [0]), 1)
        self.assertEqual(piece.dim, 1)
        n = Matrix([[1, 2], [0, 3]])
        self.assertEqual(piece.induce_operator(n), Matrix([[3]]))
        self.assertEqual(piece.project(Subspace.coordinate(2, [0])).dim, 0)

    def test_preserved_by(self):
        weight = IncreasingFiltration(2, {0: [[1, 0]]})
        self.assertTrue(weight.is_preserved_by(Matrix([[0, 1], [0, 0]]), -1))
        self.assertFalse(weight.is_preserved_by(Matrix([[0, 0], [1, 0]])))


class TestOperatorSpace(unittest.TestCase):
    """Test cases for spaces of endomorphisms."""

    def test_full(self):
        self.assertEqual(OperatorSpace.full(2).dim, 4)

    def test_filtration_shifting(self):
        weight = IncreasingFiltration(2, {0: [[1, 0]]})
        lowering = OperatorSpace.filtration_shifting(weight, -1)
        self.assertEqual(lowering.dim, 1)
        self.assertTrue(lowering.contains(Matrix([[0, 1], [0, 0]])))

    def test_bracket_closure(self):
        e = Matrix([[0, 1], [0, 0]])
        f = Matrix([[0, 0], [1, 0]])
        self.assertTrue(OperatorSpace.span(2, [e]).is_closed_under_bracket())
        self.assertFalse(OperatorSpace.span(2, [e, f]).is_closed_under_bracket())


if __name__ == "__main__":
    unittest.main()
