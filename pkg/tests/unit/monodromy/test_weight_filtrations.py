"""
Unit tests for nilpotent operators, monodromy weight filtrations and limits.
"""

import unittest

from hypothesis import given, settings, strategies as st

from mhskit.errors import NoRelativeWeightFiltrationError, StructureError
from mhskit.hodge.structure import HodgeNumbers, hodge_numbers
from mhskit.linalg.filtration import DecreasingFiltration, IncreasingFiltration
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.subspace import Subspace
from mhskit.monodromy.limit import limit_mhs
from mhskit.monodromy.nilpotent import NilpotentOperator, jordan_chains
from mhskit.monodromy.weight_filtration import (
    graded_dimensions_from_jordan, relative_weight_filtration, verify_relative_axioms, weight_filtration_pure,
)

KUMMER_WEIGHT = IncreasingFiltration(2, {-2: [[0, 1]], 0: [[1, 0], [0, 1]]})
LOWER = NilpotentOperator([[0, 0], [1, 0]])


def strictly_lower(n, entries):
    rows = [[0] * n for _ in range(n)]
    it = iter(entries)
    for i in range(n):
        for j in range(i):
            rows[i][j] = next(it)
    return rows


lower_triangular = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(st.integers(min_value=-2, max_value=2), min_size=n * (n - 1) // 2,
                       max_size=n * (n - 1) // 2).map(lambda e: strictly_lower(n, e)))


class TestNilpotentOperator(unittest.TestCase):
    """Test cases for NilpotentOperator and Jordan chains."""

    def test_basic_properties(self):
        self.assertEqual(LOWER.nilpotency_index, 2)
        self.assertEqual(LOWER.jordan_type(), [2])
        self.assertEqual(LOWER.kernel(), Subspace.coordinate(2, [1]))
        self.assertEqual(LOWER.image(), Subspace.coordinate(2, [1]))
        self.assertEqual(LOWER.exp(), Matrix([[1, 0], [1, 1]]))
        self.assertTrue(LOWER.has_integral_exponential())

    def test_half_integral_exponential(self):
        n = NilpotentOperator([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
        self.assertEqual(n.jordan_type(), [3])
        self.assertFalse(n.has_integral_exponential())

    def test_rejects_bad_matrices(self):
        for rows in ([[1, 0], [0, 0]], [[0, "i"], [0, 0]], [[0, 1, 0]]):
            with self.subTest(rows=rows):
                with self.assertRaises(StructureError):
                    NilpotentOperator(rows)

    def test_jordan_chains(self):
        chains = jordan_chains(Matrix([[0, 0, 0], [1, 0, 0], [0, 0, 0]]))
        self.assertEqual(chains, [([1, 0, 0], 2), ([0, 0, 1], 1)])

    def test_jordan_type_with_mixed_blocks(self):
        n = NilpotentOperator([[0, 0, 0], [1, 0, 0], [0, 0, 0]])
        self.assertEqual(n.jordan_type(), [2, 1])

    @given(lower_triangular)
    def test_chains_form_a_basis(self, rows):
        matrix = Matrix(rows)
        vectors = []
        for top, length in jordan_chains(matrix):
            vector = Matrix.column_vector(top)
            for _ in range(length):
                vectors.append(vector.column(0))
                vector = matrix @ vector
            self.assertTrue(vector.is_zero())
        self.assertEqual(len(vectors), matrix.rows)
        self.assertTrue(Subspace.span(vectors, matrix.rows).is_full())


class TestPureWeightFiltration(unittest.TestCase):
    """Test cases for weight_filtration_pure."""

    def test_single_block(self):
        m = weight_filtration_pure(LOWER, 0)
        self.assertEqual(m.indices, [-1, 1])
        self.assertEqual(m[-1], Subspace.coordinate(2, [1]))

    def test_zero_operator(self):
        m = weight_filtration_pure(NilpotentOperator(Matrix.zeros(2, 2)), 3)
        self.assertEqual(m.indices, [3])

    def test_jordan_prediction(self):
        self.assertEqual(graded_dimensions_from_jordan([3, 1], 1), {3: 1, 1: 2, -1: 1})

    @given(lower_triangular)
    def test_graded_dimensions_match_jordan_type(self, rows):
        operator = NilpotentOperator(rows)
        m = weight_filtration_pure(operator, 0)
        self.assertEqual(m.graded_dimensions(), graded_dimensions_from_jordan(operator.jordan_type(), 0))
        self.assertTrue(m.is_preserved_by(operator.matrix, -2))


class TestRelativeWeightFiltration(unittest.TestCase):
    """Test cases for relative_weight_filtration."""

    def test_kummer_degeneration(self):
        result = relative_weight_filtration(LOWER, KUMMER_WEIGHT)
        self.assertTrue(result.exists)
        self.assertEqual(result.filtration, KUMMER_WEIGHT)
        self.assertEqual(result.to_dict(), {
            'exists': True,
            'filtration': {'-2': [["0", "1"]], '0': [["1", "0"], ["0", "1"]]},
        })

    def test_pure_case_is_the_monodromy_filtration(self):
        weight = IncreasingFiltration.trivial(2, 1)
        result = relative_weight_filtration(LOWER, weight)
        self.assertTrue(result.exists)
        self.assertEqual(result.filtration, weight_filtration_pure(LOWER, 1))

    def test_nonexistence(self):
        weight = IncreasingFiltration(2, {-1: [[0, 1]], 0: [[1, 0], [0, 1]]})
        result = relative_weight_filtration(LOWER, weight)
        self.assertFalse(result.exists)
        self.assertIn("no lift", result.reason)
        self.assertEqual(result.to_dict()['exists'], False)

    def test_operator_must_preserve_weight(self):
        with self.assertRaises(StructureError):
            relative_weight_filtration(NilpotentOperator([[0, 1], [0, 0]]), KUMMER_WEIGHT)

    def test_verify_rejects_wrong_candidate(self):
        failures = verify_relative_axioms(LOWER, KUMMER_WEIGHT, IncreasingFiltration.trivial(2, 0))
        self.assertIn("N M_0 is not contained in M_-2", failures)

    @settings(deadline=None)
    @given(lower_triangular)
    def test_trivial_weight_gives_pure_filtration(self, rows):
        operator = NilpotentOperator(rows)
        weight = IncreasingFiltration.trivial(operator.dim, 2)
        result = relative_weight_filtration(operator, weight)
        self.assertTrue(result.exists)
        self.assertEqual(result.filtration, weight_filtration_pure(operator, 2))


def padded(space, before, after):
    n = before + space.ambient_dim + after
    return Subspace(n, [[0] * before + list(v) + [0] * after for v in space.vectors()])


def summed(first, second):
    """The direct sum of two increasing filtrations, first block first."""
    n1, n2 = first.ambient_dim, second.ambient_dim
    levels = set(first.indices) | set(second.indices)
    return IncreasingFiltration(n1 + n2, {
        k: padded(first[k], 0, n2).sum(padded(second[k], n1, 0)) for k in levels})


def split_extension(top, bottom, gap):
    """N = diag(N_top, N_bottom) with W_{b-gap} the bottom block and W_b everything."""
    n1, n2 = len(top), len(bottom)
    matrix = Matrix.block_diag([Matrix(top), Matrix(bottom)])
    weight = IncreasingFiltration(n1 + n2, {-gap: Subspace.coordinate(n1 + n2, range(n1, n1 + n2)),
                                            0: Subspace.full(n1 + n2)})
    expected = summed(weight_filtration_pure(NilpotentOperator(top), 0),
                      weight_filtration_pure(NilpotentOperator(bottom), -gap))
    return matrix, weight, expected


def mixing(n1, n2, entries):
    """exp of a map from the top block into the bottom block."""
    x = Matrix.zeros(n1 + n2, n1 + n2)
    it = iter(entries)
    for i in range(n1, n1 + n2):
        for j in range(n1):
            x = x.with_entry(i, j, next(it))
    return x.exp_nilpotent()


small_lower = st.integers(min_value=1, max_value=3).flatmap(
    lambda n: st.lists(st.integers(min_value=-2, max_value=2), min_size=n * (n - 1) // 2,
                       max_size=n * (n - 1) // 2).map(lambda e: strictly_lower(n, e)))
mixing_entries = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=9, max_size=9)
nonzero_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(lambda c: c != 0)


class TestRelativeWeightOracle(unittest.TestCase):
    """M(N, W) against the direct sum of pure filtrations of a W-split N."""

    @settings(max_examples=60, deadline=None)
    @given(small_lower, small_lower, st.integers(min_value=1, max_value=3), mixing_entries)
    def test_transported_split_operators(self, top, bottom, gap, entries):
        matrix, weight, expected = split_extension(top, bottom, gap)
        g = mixing(len(top), len(bottom), entries)
        operator = NilpotentOperator(g @ matrix @ g.inverse())
        self.assertEqual(weight.apply(g), weight)
        result = relative_weight_filtration(operator, weight)
        self.assertTrue(result.exists, result.reason)
        self.assertEqual(result.filtration, expected.apply(g))
        self.assertEqual(verify_relative_axioms(operator, weight, result.filtration), [])

    def test_split_extension_by_hand(self):
        matrix, weight, expected = split_extension([[0, 0], [1, 0]], [[0]], 2)
        self.assertEqual(expected, IncreasingFiltration(3, {-2: [[0, 0, 1]], -1: [[0, 1, 0], [0, 0, 1]],
                                                            1: Subspace.full(3)}))
        self.assertEqual(relative_weight_filtration(NilpotentOperator(matrix), weight).filtration, expected)

    @settings(max_examples=40, deadline=None)
    @given(small_lower, small_lower, st.integers(min_value=1, max_value=3), mixing_entries, nonzero_rationals)
    def test_scale_invariance(self, top, bottom, gap, entries, factor):
        matrix, weight, _ = split_extension(top, bottom, gap)
        g = mixing(len(top), len(bottom), entries)
        operator = NilpotentOperator(g @ matrix @ g.inverse())
        scaled = relative_weight_filtration(operator.scaled(factor), weight)
        self.assertEqual(scaled, relative_weight_filtration(operator, weight))

    @settings(max_examples=40, deadline=None)
    @given(small_lower, small_lower, st.integers(min_value=1, max_value=3), mixing_entries,
           st.lists(nonzero_rationals, min_size=6, max_size=6))
    def test_functorial_for_isomorphisms(self, top, bottom, gap, entries, diagonal):
        matrix, weight, _ = split_extension(top, bottom, gap)
        n = matrix.rows
        h = Matrix.diag(diagonal[:n]) @ mixing(len(top), len(bottom), entries).T
        operator = NilpotentOperator(matrix)
        moved = relative_weight_filtration(NilpotentOperator(h @ matrix @ h.inverse()), weight.apply(h))
        self.assertTrue(moved.exists)
        self.assertEqual(moved.filtration, relative_weight_filtration(operator, weight).filtration.apply(h))

    def test_direct_sum_of_degenerations(self):
        kummer_like = relative_weight_filtration(LOWER, KUMMER_WEIGHT).filtration
        pure = relative_weight_filtration(LOWER, IncreasingFiltration.trivial(2, 1)).filtration
        total = relative_weight_filtration(
            NilpotentOperator(Matrix.block_diag([LOWER.matrix, LOWER.matrix])),
            summed(KUMMER_WEIGHT, IncreasingFiltration.trivial(2, 1)))
        self.assertEqual(total.filtration, summed(kummer_like, pure))

    def test_nonexistence_survives_transport(self):
        weight = IncreasingFiltration(2, {-1: [[0, 1]], 0: [[1, 0], [0, 1]]})
        g = Matrix([[3, 0], [2, 1]])
        moved = NilpotentOperator(g @ LOWER.matrix @ g.inverse())
        self.assertFalse(relative_weight_filtration(moved, weight.apply(g)).exists)


class TestLimit(unittest.TestCase):
    """Test cases for limit_mhs."""

    def test_kummer_limit(self):
        hodge = DecreasingFiltration(2, {-1: [[1, 0], [0, 1]], 0: [[1, 0]]})
        result = limit_mhs(hodge, LOWER, KUMMER_WEIGHT)
        self.assertTrue(result.valid)
        self.assertEqual(hodge_numbers(result.mhs), HodgeNumbers({(-1, -1): 1, (0, 0): 1}))
        self.assertEqual(result.to_dict()['hodge_numbers'], {"-1,-1": 1, "0,0": 1})

    def test_degenerating_elliptic_curve(self):
        hodge = DecreasingFiltration(2, {0: [[1, 0], [0, 1]], 1: [[1, 0]]})
        result = limit_mhs(hodge, LOWER, IncreasingFiltration.trivial(2, 1))
        self.assertTrue(result.valid)
        self.assertEqual(hodge_numbers(result.mhs), HodgeNumbers({(0, 0): 1, (1, 1): 1}))

    def test_invalid_limit_is_reported(self):
        hodge = DecreasingFiltration(2, {-1: [[1, 0], [0, 1]], 0: [[0, 1]]})
        result = limit_mhs(hodge, LOWER, KUMMER_WEIGHT)
        self.assertFalse(result.valid)
        self.assertFalse(result.report.valid)
        self.assertNotIn('hodge_numbers', result.to_dict())

    def test_missing_relative_filtration_raises(self):
        weight = IncreasingFiltration(2, {-1: [[0, 1]], 0: [[1, 0], [0, 1]]})
        with self.assertRaises(NoRelativeWeightFiltrationError):
            limit_mhs(DecreasingFiltration.trivial(2, 0), LOWER, weight)

    def test_dimension_mismatch(self):
        with self.assertRaises(StructureError):
            limit_mhs(DecreasingFiltration.trivial(3, 0), LOWER, KUMMER_WEIGHT)


if __name__ == "__main__":
    unittest.main()
