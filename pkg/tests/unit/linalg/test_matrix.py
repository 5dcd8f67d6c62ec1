"""
Unit tests for the Matrix module.
"""

import unittest

from hypothesis import given, strategies as st

from mhskit.errors import StructureError
from mhskit.linalg.matrix import Matrix, bracket
from mhskit.linalg.scalars import GaussianRational, I

small = st.integers(min_value=-5, max_value=5)
square3 = st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3)


class TestMatrix(unittest.TestCase):
    """Test cases for exact matrices."""

    def test_construction_from_strings(self):
        m = Matrix([["1/2", "i"], ["0", "1-i"]])
        self.assertEqual(m[0, 0], GaussianRational(1, 0) / 2)
        self.assertEqual(m[1, 1], GaussianRational(1, -1))
        self.assertEqual(m.to_strings(), [["1/2", "0+1*i"], ["0", "1-1*i"]])

    def test_ragged_rows(self):
        with self.assertRaises(StructureError):
            Matrix([[1, 2], [3]])

    def test_empty_shapes(self):
        self.assertEqual(Matrix.zeros(0, 3).shape, (0, 3))
        self.assertEqual(Matrix.from_rows([], 2).shape, (0, 2))
        self.assertEqual((Matrix.zeros(2, 0) @ Matrix.zeros(0, 2)), Matrix.zeros(2, 2))

    def test_product_acts_on_columns(self):
        m = Matrix([[0, 1], [0, 0]])
        e1 = Matrix.column_vector([0, 1])
        self.assertEqual(m @ e1, Matrix.column_vector([1, 0]))

    def test_inverse(self):
        m = Matrix([[2, 1], [1, 1]])
        self.assertEqual(m.inverse(), Matrix([[1, -1], [-1, 2]]))
        self.assertEqual(m @ m.inverse(), Matrix.identity(2))

    def test_singular_inverse(self):
        with self.assertRaises(StructureError):
            Matrix([[1, 2], [2, 4]]).inverse()

    def test_rank_and_det(self):
        self.assertEqual(Matrix([[1, 2], [2, 4]]).rank(), 1)
        self.assertEqual(Matrix([[1, 2], [3, 4]]).det(), -2)
        self.assertEqual(Matrix([[1, I], [I, 1]]).det(), 2)

    def test_nullspace(self):
        kernel = Matrix([[1, 1]]).nullspace()
        self.assertEqual(kernel, Matrix([[-1], [1]]))

    def test_solve_inconsistent(self):
        self.assertIsNone(Matrix([[1, 0], [0, 0]]).solve(Matrix.column_vector([0, 1])))

    def test_solve_sets_free_variables_to_zero(self):
        solution = Matrix([[1, 1]]).solve(Matrix([[3]]))
        self.assertEqual(solution, Matrix([[3], [0]]))

    def test_exp_and_log(self):
        n = Matrix([[0, 1], [0, 0]])
        self.assertEqual(n.exp_nilpotent(), Matrix([[1, 1], [0, 1]]))
        self.assertEqual(n.exp_nilpotent().log_unipotent(), n)

    def test_exp_needs_nilpotent(self):
        with self.assertRaises(StructureError):
            Matrix.identity(2).exp_nilpotent()

    def test_conjugate_transpose(self):
        m = Matrix([[1, I], [0, 2]])
        self.assertEqual(m.H, Matrix([[1, 0], [-I, 2]]))
        self.assertFalse(m.is_real())

    def test_bracket(self):
        e = Matrix([[0, 1], [0, 0]])
        f = Matrix([[0, 0], [1, 0]])
        self.assertEqual(bracket(e, f), Matrix([[1, 0], [0, -1]]))

    def test_shape_mismatch(self):
        with self.assertRaises(StructureError):
            Matrix.identity(2) + Matrix.identity(3)
        with self.assertRaises(StructureError):
            Matrix.identity(2) @ Matrix.identity(3)

    @given(square3)
    def test_inverse_when_invertible(self, rows):
        m = Matrix(rows)
        if m.det() == 0:
            self.assertLess(m.rank(), 3)
        else:
            self.assertEqual(m.rank(), 3)
            self.assertEqual(m.inverse() @ m, Matrix.identity(3))

    @given(square3, square3)
    def test_determinant_is_multiplicative(self, a, b):
        a, b = Matrix(a), Matrix(b)
        self.assertEqual((a @ b).det(), a.det() * b.det())


if __name__ == "__main__":
    unittest.main()
