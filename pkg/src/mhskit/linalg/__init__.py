"""
Exact linear algebra over Q and Q(i): scalars, matrices, subspaces,
filtrations, integer lattices and spaces of operators.
"""

from mhskit.linalg.filtration import DecreasingFiltration, GradedPiece, IncreasingFiltration
from mhskit.linalg.lattice import IntegerLattice, hermite_normal_form, integer_kernel, smith_invariants
from mhskit.linalg.matrix import Matrix, bracket
from mhskit.linalg.operators import OperatorSpace
from mhskit.linalg.scalars import I, ONE, ZERO, GaussianRational, Rational, format_scalar, parse_scalar
from mhskit.linalg.subspace import Subspace


def sum_subspaces(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def conjugate(a: Subspace) -> Subspace:
    return a.conjugate()


def quotient_image(a: Subspace, modulo: Subspace) -> Subspace:
    return a.quotient_image(modulo)


__all__ = [
    "GaussianRational", "Rational", "I", "ONE", "ZERO", "format_scalar", "parse_scalar",
    "Matrix", "bracket", "Subspace", "IncreasingFiltration", "DecreasingFiltration",
    "GradedPiece", "IntegerLattice", "integer_kernel", "hermite_normal_form",
    "smith_invariants", "OperatorSpace", "sum_subspaces", "intersect", "conjugate",
    "quotient_image",
]
