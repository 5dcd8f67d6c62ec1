"""
Unit tests for the Deligne bigrading, Weil operators, graded polarizations
and morphisms.
"""

import unittest

from hypothesis import given, strategies as st

from mhskit.errors import NotPureError, StructureError
from mhskit.hodge.bigrading import Bigrading, check_bigrading, deligne_bigrading, is_split_over_R
from mhskit.hodge.constructions import direct_sum, elliptic, hodge_tate, kummer, tensor
from mhskit.hodge.morphism import MhsMorphism, check_morphism, strictness_check
from mhskit.hodge.polarization import check_graded_polarization, weil_operator
from mhskit.hodge.structure import GradedPolarization, HodgeNumbers
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import GaussianRational
from mhskit.linalg.subspace import Subspace

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)


class TestDeligneBigrading(unittest.TestCase):
    """Test cases for deligne_bigrading."""

    def test_kummer_pieces(self):
        bigrading = deligne_bigrading(kummer("2+3*i"))
        self.assertEqual(bigrading.bidegrees(), [(-1, -1), (0, 0)])
        self.assertEqual(bigrading[(-1, -1)], Subspace.coordinate(2, [1]))
        self.assertEqual(bigrading[(0, 0)], Subspace.span([[1, "2+3*i"]], 2))
        self.assertEqual(bigrading.to_dict(), {"-1,-1": [["0", "1"]], "0,0": [["1", "2+3*i"]]})
        self.assertEqual(bigrading.hodge_numbers(), HodgeNumbers({(-1, -1): 1, (0, 0): 1}))

    def test_axioms_hold(self):
        for mhs in (kummer("2+3*i"), elliptic("i"), direct_sum(kummer("i"), hodge_tate(0))):
            with self.subTest(mhs=mhs):
                self.assertEqual(check_bigrading(mhs, deligne_bigrading(mhs)), [])

    def test_split_over_r(self):
        self.assertTrue(is_split_over_R(kummer("1/2")))
        self.assertFalse(is_split_over_R(kummer("2+3*i")))
        self.assertTrue(is_split_over_R(elliptic("i")))

    def test_eigenvalue_matrix(self):
        bigrading = deligne_bigrading(kummer("1/2"))
        y = bigrading.eigenvalue_matrix(lambda p, q: p + q)
        self.assertEqual(y, Matrix([[0, 0], [1, -2]]))

    def test_pieces_must_decompose(self):
        with self.assertRaises(StructureError):
            Bigrading(2, {(0, 0): Subspace.coordinate(2, [0])})

    @given(rationals, rationals)
    def test_split_exactly_for_real_extension(self, re, im):
        mhs = kummer(GaussianRational(re, im))
        self.assertEqual(is_split_over_R(mhs), im == 0)
        self.assertEqual(check_bigrading(mhs, deligne_bigrading(mhs)), [])


def embedded(space, before, after):
    n = before + space.ambient_dim + after
    return Subspace(n, [[0] * before + list(v) + [0] * after for v in space.vectors()])


def tensor_span(a, b):
    rows = [[x * y for x in u for y in v] for u in a.vectors() for v in b.vectors()]
    return Subspace(a.ambient_dim * b.ambient_dim, rows)


gaussians = st.builds(GaussianRational, rationals, rationals)


class TestBigradingFunctoriality(unittest.TestCase):
    """The bigrading commutes with sums, tensor products and morphisms."""

    @given(gaussians, gaussians)
    def test_direct_sum(self, z, w):
        first, second = kummer(z), direct_sum(elliptic("i"), kummer(w))
        total = deligne_bigrading(direct_sum(first, second))
        a, b = deligne_bigrading(first), deligne_bigrading(second)
        for key in set(a.bidegrees()) | set(b.bidegrees()):
            self.assertEqual(total[key], embedded(a[key], 0, second.rank).sum(embedded(b[key], first.rank, 0)))

    @given(gaussians, gaussians)
    def test_tensor_product(self, z, w):
        first, second = kummer(z), kummer(w)
        total = deligne_bigrading(tensor(first, second))
        a, b = deligne_bigrading(first), deligne_bigrading(second)
        expected = {}
        for (p, q), x in a.pieces.items():
            for (r, s), y in b.pieces.items():
                key = (p + r, q + s)
                expected[key] = expected.get(key, Subspace.zero(4)).sum(tensor_span(x, y))
        self.assertEqual(total.pieces, expected)

    @given(gaussians)
    def test_morphisms_preserve_pieces(self, z):
        source = kummer(z)
        projection = Matrix([[1, 0]])
        inclusion = Matrix([[0], [1]])
        target = deligne_bigrading(hodge_tate(0))
        for key, piece in deligne_bigrading(source).pieces.items():
            self.assertTrue(piece.apply(projection) <= target[key])
        self.assertEqual(deligne_bigrading(hodge_tate(1))[(-1, -1)].apply(inclusion),
                         deligne_bigrading(source)[(-1, -1)])


class TestWeilOperator(unittest.TestCase):
    """Test cases for the Weil operator."""

    def test_elliptic(self):
        c = weil_operator(elliptic("i"))
        self.assertEqual(c, Matrix([[0, 1], [-1, 0]]))
        self.assertEqual(c @ c, -Matrix.identity(2))

    def test_tate(self):
        self.assertEqual(weil_operator(hodge_tate(3)), Matrix.identity(1))

    def test_mixed_structure_rejected(self):
        with self.assertRaises(NotPureError):
            weil_operator(kummer("i"))


class TestGradedPolarization(unittest.TestCase):
    """Test cases for check_graded_polarization."""

    def test_kummer(self):
        self.assertTrue(check_graded_polarization(kummer("2+3*i")).polarized)

    def test_elliptic_upper_half_plane(self):
        self.assertTrue(check_graded_polarization(elliptic("i")).polarized)
        report = check_graded_polarization(elliptic("-i"))
        self.assertFalse(report.polarized)
        self.assertIn("h on Gr_1 is not positive definite", report.failures[1])

    def test_wrong_symmetry(self):
        forms = GradedPolarization({1: Matrix([[1, 0], [0, 1]])})
        report = check_graded_polarization(elliptic("i"), forms)
        self.assertIn("q_1 is not antisymmetric", report.failures[1])

    def test_missing_form(self):
        report = check_graded_polarization(kummer("i"), GradedPolarization({0: Matrix([[1]])}))
        self.assertEqual(report.to_dict(), {'polarized': False,
                                            'failures': {'-2': ["no polarization for Gr_-2"]}})

    def test_forms_must_be_rational(self):
        with self.assertRaises(StructureError):
            GradedPolarization({0: Matrix([["i"]])})


class TestMorphisms(unittest.TestCase):
    """Test cases for morphisms of mixed Hodge structures."""

    def test_inclusion_of_split_part(self):
        f = MhsMorphism(hodge_tate(0), kummer(0), Matrix([[1], [0]]))
        self.assertTrue(check_morphism(f).ok)
        self.assertTrue(strictness_check(f).ok)

    def test_inclusion_into_nonsplit_extension(self):
        f = MhsMorphism(hodge_tate(0), kummer(1), Matrix([[1], [0]]))
        report = check_morphism(f)
        self.assertFalse(report.ok)
        self.assertIn("f(F^0) is not contained in F'^0", report.failures)

    def test_shape_checked(self):
        with self.assertRaises(StructureError):
            MhsMorphism(hodge_tate(0), kummer(0), Matrix([[1, 0]]))


if __name__ == "__main__":
    unittest.main()
