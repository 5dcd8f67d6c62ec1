"""
Nilpotent Operator Module

Monodromy logarithms and their Jordan chains.
"""

from typing import Any, List, Tuple

from mhskit.errors import StructureError
from mhskit.linalg.filtration import IncreasingFiltration
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import GaussianRational
from mhskit.linalg.subspace import Subspace

Chain = Tuple[List[GaussianRational], int]


class NilpotentOperator:
    """A rational nilpotent matrix N with N^index = 0 and N^(index-1) != 0."""

    def __init__(self, matrix: Any):
        matrix = Matrix(matrix)
        if not matrix.is_square():
            raise StructureError(f"Nilpotent operator must be square, got {matrix.shape}")
        if not matrix.is_real():
            raise StructureError("Monodromy logarithm must be rational")
        if not matrix.is_nilpotent():
            raise StructureError("Operator is not nilpotent")
        self.matrix = matrix
        index, power = 0, Matrix.identity(matrix.rows)
        while not power.is_zero():
            power = power @ matrix
            index += 1
        self.nilpotency_index = index

    def __repr__(self) -> str:
        return f"NilpotentOperator(index={self.nilpotency_index}, matrix={self.matrix.to_strings()})"

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, NilpotentOperator):
            return NotImplemented
        return self.matrix == other.matrix

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def power(self, k: int) -> Matrix:
        return self.matrix ** k

    def kernel(self, k: int = 1) -> Subspace:
        return Subspace.column_span(self.power(k).nullspace())

    def image(self, k: int = 1) -> Subspace:
        return Subspace.column_span(self.power(k))

    def preserves(self, weight: IncreasingFiltration) -> bool:
        return weight.is_preserved_by(self.matrix)

    def scaled(self, factor: Any) -> "NilpotentOperator":
        return NilpotentOperator(self.matrix * factor)

    def exp(self) -> Matrix:
        return self.matrix.exp_nilpotent()

    def has_integral_exponential(self) -> bool:
        return self.exp().is_integer()

    def jordan_type(self) -> List[int]:
        """Jordan block sizes, largest first."""
        ranks = [self.power(k).rank() for k in range(self.nilpotency_index + 2)]
        sizes: List[int] = []
        for size in range(self.nilpotency_index, 0, -1):
            # blocks of size >= s: rank N^(s-1) - rank N^s
            at_least = ranks[size - 1] - ranks[size]
            at_least_next = ranks[size] - ranks[size + 1]
            sizes.extend([size] * (at_least - at_least_next))
        return sizes


def jordan_chains(matrix: Matrix) -> List[Chain]:
    """
    Tops of Jordan chains of a nilpotent matrix, with their lengths.

    For each length L (descending) the tops form a complement of
    ker A^(L-1) + A(ker A^(L+1)) inside ker A^L. The chains {A^j v} for all
    returned (v, L) form a basis.
    """
    n = matrix.rows
    if n == 0:
        return []
    kernels = [Subspace.zero(n)]
    power = Matrix.identity(n)
    while not kernels[-1].is_full():
        power = power @ matrix
        kernels.append(Subspace.column_span(power.nullspace()))
        if len(kernels) > n + 1:
            raise StructureError("Matrix is not nilpotent")
    chains: List[Chain] = []
    top = len(kernels) - 1
    for length in range(top, 0, -1):
        above = kernels[length + 1] if length + 1 <= top else kernels[top]
        covered = kernels[length - 1].sum(above.apply(matrix))
        for vector in covered.intersect(kernels[length]).complement_in(kernels[length]):
            chains.append((vector, length))
    return chains
