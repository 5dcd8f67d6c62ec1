"""
Lattice Module

Integer lattices in Z^n, Hermite and Smith normal forms and saturated integer
kernels. The normal forms come from sympy over ZZ.
"""

import logging
from fractions import Fraction
from math import gcd
from typing import Any, List, Sequence

from sympy import Matrix as IntegerMatrix, ZZ
from sympy.matrices.normalforms import hermite_normal_form as column_hermite_form, smith_normal_form

from mhskit.errors import StructureError
from mhskit.linalg.matrix import Matrix

logger = logging.getLogger(__name__)

IntRows = List[List[int]]


def integer_rows(matrix: Any) -> IntRows:
    """
    Integer rows of a rational matrix, each row scaled by the lcm of its denominators.

    Scaling rows keeps the kernel, so this is only used where the row space
    over Q or the kernel is what matters.
    """
    if isinstance(matrix, Matrix):
        if not matrix.is_real():
            raise StructureError("Integer lattice computations need a rational matrix")
        rows = [[x.re for x in row] for row in matrix.row_list()]
    else:
        rows = [[Fraction(x) for x in row] for row in matrix]
    result = []
    for row in rows:
        scale = 1
        for x in row:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        result.append([int(x * scale) for x in row])
    return result


def _row_hermite_form(rows: IntRows) -> IntRows:
    """
    Row Hermite form of integer rows: left pivots increasing, positive, and
    entries above each pivot reduced to [0, pivot). Zero rows are dropped.

    sympy reduces by column operations with each pivot at the bottom of its
    column. Reversing the coordinates, transposing, and reading the result
    back in reverse order gives the row form.
    """
    if not rows or not any(any(row) for row in rows):
        return []
    cols = len(rows[0])
    flipped = IntegerMatrix([list(reversed(row)) for row in rows]).T
    reduced = column_hermite_form(flipped).T
    result = []
    for i in range(reduced.rows):
        row = [int(reduced[i, cols - 1 - j]) for j in range(cols)]
        if any(row):
            result.append(row)
    result.reverse()
    return result


def hermite_normal_form(matrix: Any) -> IntRows:
    """
    Row Hermite normal form: echelon rows, positive pivots, entries above each
    pivot reduced to [0, pivot). Zero rows are dropped.
    """
    return _row_hermite_form(integer_rows(matrix))


def smith_invariants(matrix: Any) -> List[int]:
    """The nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    rows = integer_rows(matrix)
    if not rows or not any(any(row) for row in rows):
        return []
    diagonal = smith_normal_form(IntegerMatrix(rows), domain=ZZ)
    invariants = [abs(int(diagonal[i, i])) for i in range(min(diagonal.shape))]
    return sorted(d for d in invariants if d)


class IntegerLattice:
    """
    A sublattice of Z^ambient_dim given by Z-independent basis rows in Hermite normal form.
    """

    __slots__ = ("_ambient_dim", "_basis")

    def __init__(self, ambient_dim: int, vectors: Sequence[Sequence[int]] = ()):
        self._ambient_dim = ambient_dim
        rows = [[int(x) for x in v] for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise StructureError(f"Lattice vector of length {len(row)} in Z^{ambient_dim}")
        self._basis = tuple(tuple(r) for r in hermite_normal_form(rows)) if rows else ()

    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    @property
    def rank(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> List[List[int]]:
        return [list(r) for r in self._basis]

    def basis_matrix(self) -> Matrix:
        return Matrix.from_rows(self.basis, self._ambient_dim)

    def contains(self, vector: Sequence[int]) -> bool:
        residual = [int(x) for x in vector]
        for row in self._basis:
            pivot_column = next(j for j, x in enumerate(row) if x)
            q, remainder = divmod(residual[pivot_column], row[pivot_column])
            if remainder:
                return False
            residual = [u - q * v for u, v in zip(residual, row)]
        return not any(residual)

    def gram(self, form: Matrix) -> Matrix:
        """The Gram matrix B q B^T of a bilinear form on the lattice basis."""
        basis = self.basis_matrix()
        return basis @ form @ basis.T

    def is_saturated(self) -> bool:
        """True when the lattice equals its Q-span intersected with Z^n."""
        return all(d == 1 for d in smith_invariants(self.basis)) if self.rank else True

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self._ambient_dim == other._ambient_dim and self._basis == other._basis

    def __hash__(self) -> int:
        return hash((self._ambient_dim, self._basis))

    def __repr__(self) -> str:
        return f"IntegerLattice(rank={self.rank}, basis={self.basis})"


def integer_kernel(matrix: Any) -> IntegerLattice:
    """
    The lattice of integer vectors v with matrix @ v = 0.

    [M^T | I] has full row rank, so its Hermite form is U [M^T | I] for a
    unimodular U. Its rows vanishing on the M^T block carry kernel vectors in
    the identity block and, U being invertible over Z, they span a saturated
    lattice.
    """
    rows = integer_rows(matrix)
    if isinstance(matrix, Matrix):
        n = matrix.cols
    else:
        n = len(rows[0]) if rows else 0
    if not rows:
        return IntegerLattice(n, [[int(i == j) for j in range(n)] for i in range(n)])
    m = len(rows)
    augmented = [[rows[i][j] for i in range(m)] + [int(j == k) for k in range(n)] for j in range(n)]
    kernel = [row[m:] for row in _row_hermite_form(augmented) if not any(row[:m])]
    logger.debug("integer kernel: %d x %d matrix, kernel rank %d", m, n, len(kernel))
    return IntegerLattice(n, kernel)
