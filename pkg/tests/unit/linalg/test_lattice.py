"""
Unit tests for the Lattice module.
"""

import unittest
from functools import reduce
from itertools import combinations
from math import gcd

import sympy
from hypothesis import given, settings, strategies as st

from mhskit.errors import StructureError
from mhskit.linalg.lattice import (
    IntegerLattice, hermite_normal_form, integer_kernel, smith_invariants,
)
from mhskit.linalg.matrix import Matrix

entries = st.integers(min_value=-6, max_value=6)
int_matrices = st.integers(min_value=1, max_value=3).flatmap(
    lambda rows: st.integers(min_value=1, max_value=3).flatmap(
        lambda cols: st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows)))


def determinantal_divisors(rows):
    """gcd of the k x k minors for each k, computed with sympy."""
    m = sympy.Matrix(rows)
    divisors = []
    for k in range(1, min(m.shape) + 1):
        minors = [int(m.extract(list(r), list(c)).det())
                  for r in combinations(range(m.rows), k) for c in combinations(range(m.cols), k)]
        g = reduce(gcd, (abs(x) for x in minors), 0)
        if g == 0:
            break
        divisors.append(g)
    return divisors


class TestLattice(unittest.TestCase):
    """Test cases for integer normal forms and kernels."""

    def test_hermite_normal_form(self):
        self.assertEqual(hermite_normal_form([[2, 4], [1, 3]]), [[1, 1], [0, 2]])
        self.assertEqual(hermite_normal_form([[2, 4], [1, 2]]), [[1, 2]])

    def test_smith_invariants(self):
        self.assertEqual(smith_invariants([[2, 4], [6, 8]]), [2, 4])
        self.assertEqual(smith_invariants([[0, 0], [0, 0]]), [])

    def test_integer_kernel(self):
        kernel = integer_kernel(Matrix([[1, 2, 3]]))
        self.assertEqual(kernel.rank, 2)
        self.assertTrue(kernel.is_saturated())
        for vector in ([2, -1, 0], [3, 0, -1], [1, 1, -1]):
            self.assertTrue(kernel.contains(vector))
        self.assertFalse(kernel.contains([1, 0, 0]))

    def test_kernel_is_saturated_for_scaled_rows(self):
        kernel = integer_kernel(Matrix([["1/2", 1]]))
        self.assertEqual(kernel.basis, [[2, -1]])

    def test_kernel_of_empty_matrix(self):
        self.assertEqual(integer_kernel(Matrix.zeros(0, 2)).rank, 2)

    def test_non_saturated_lattice(self):
        self.assertFalse(IntegerLattice(2, [[2, 0]]).is_saturated())
        self.assertTrue(IntegerLattice(2, [[1, 0]]).is_saturated())

    def test_lattice_vectors_must_fit(self):
        with self.assertRaises(StructureError):
            IntegerLattice(2, [[1, 2, 3]])

    def test_complex_matrix_rejected(self):
        with self.assertRaises(StructureError):
            integer_kernel(Matrix([["i", 1]]))

    def test_gram(self):
        lattice = IntegerLattice(2, [[1, 1]])
        self.assertEqual(lattice.gram(Matrix.identity(2)), Matrix([[2]]))

    @settings(max_examples=60, deadline=None)
    @given(int_matrices)
    def test_smith_matches_determinantal_divisors(self, rows):
        invariants = smith_invariants(rows)
        products = [reduce(lambda a, b: a * b, invariants[:k], 1) for k in range(1, len(invariants) + 1)]
        self.assertEqual(products, determinantal_divisors(rows))

    @settings(max_examples=60, deadline=None)
    @given(int_matrices)
    def test_hermite_form_is_an_echelon_basis_of_the_row_lattice(self, rows):
        basis = hermite_normal_form(rows)
        self.assertEqual(len(basis), Matrix(rows).rank())
        pivots = [next(j for j, x in enumerate(row) if x) for row in basis]
        self.assertEqual(pivots, sorted(set(pivots)))
        for i, (row, pivot) in enumerate(zip(basis, pivots)):
            self.assertGreater(row[pivot], 0)
            for above in basis[:i]:
                self.assertTrue(0 <= above[pivot] < row[pivot])
        lattice = IntegerLattice(len(rows[0]), basis)
        for row in rows:
            self.assertTrue(lattice.contains(row))
        self.assertEqual(IntegerLattice(len(rows[0]), rows), lattice)

    @settings(max_examples=60, deadline=None)
    @given(int_matrices)
    def test_kernel_vectors_are_annihilated(self, rows):
        m = Matrix(rows)
        kernel = integer_kernel(m)
        self.assertEqual(kernel.rank, m.cols - m.rank())
        for vector in kernel.basis:
            self.assertTrue((m @ Matrix.column_vector(vector)).is_zero())
        self.assertTrue(kernel.is_saturated())


if __name__ == "__main__":
    unittest.main()
