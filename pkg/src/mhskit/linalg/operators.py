"""
Operators Module

Linear spaces of endomorphisms, stored as subspaces of vectorized matrices
(row-major: index i*n + j holds entry (i, j)).
"""

from typing import Any, Iterable, List, Optional

from mhskit.errors import StructureError
from mhskit.linalg.filtration import DecreasingFiltration, IncreasingFiltration
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import GaussianRational
from mhskit.linalg.subspace import Subspace


def mapping_constraints(source: Subspace, target: Subspace, rows: int) -> List[List[GaussianRational]]:
    """
    Linear conditions on vec(X) expressing X(source) <= target for X of shape rows x cols.

    The condition a . X w = 0 for a in ann(target) and w in source is the row
    kron(a, w) against the row-major vectorization.
    """
    if target.ambient_dim != rows:
        raise StructureError("Target subspace does not live in the codomain")
    conditions = target.annihilator().vectors()
    result = []
    for a in conditions:
        for w in source.vectors():
            result.append([x * y for x in a for y in w])
    return result


class OperatorSpace:
    """A subspace of End(Q(i)^n)."""

    __slots__ = ("_n", "_space")

    def __init__(self, n: int, space: Subspace):
        if space.ambient_dim != n * n:
            raise StructureError(f"Operator space of ambient {space.ambient_dim} is not End of dimension {n}")
        self._n = n
        self._space = space

    @classmethod
    def span(cls, n: int, matrices: Iterable[Matrix]) -> "OperatorSpace":
        return cls(n, Subspace(n * n, [m.vectorize() for m in matrices]))

    @classmethod
    def full(cls, n: int) -> "OperatorSpace":
        return cls(n, Subspace.full(n * n))

    @classmethod
    def from_constraints(cls, n: int, constraints: List[List[GaussianRational]]) -> "OperatorSpace":
        if not constraints:
            return cls.full(n)
        return cls(n, Subspace(n * n, constraints).annihilator())

    @classmethod
    def filtration_shifting(cls, weight: IncreasingFiltration, shift: int) -> "OperatorSpace":
        """{X : X W_k <= W_{k+shift} for every k}; shift -1 gives W_{-1}End."""
        n = weight.ambient_dim
        constraints: List[List[GaussianRational]] = []
        for k, space in weight:
            constraints.extend(mapping_constraints(space, weight[k + shift], n))
        return cls.from_constraints(n, constraints)

    @classmethod
    def hodge_shifting(cls, hodge: DecreasingFiltration, shift: int) -> "OperatorSpace":
        """{X : X F^p <= F^{p+shift} for every p}."""
        n = hodge.ambient_dim
        constraints: List[List[GaussianRational]] = []
        for p in range(hodge.lowest() - abs(shift), hodge.highest() + 1):
            constraints.extend(mapping_constraints(hodge[p], hodge[p + shift], n))
        return cls.from_constraints(n, constraints)

    @property
    def n(self) -> int:
        return self._n

    @property
    def dim(self) -> int:
        return self._space.dim

    @property
    def space(self) -> Subspace:
        return self._space

    def basis(self) -> List[Matrix]:
        return [Matrix.from_vector(v, self._n, self._n) for v in self._space.vectors()]

    def contains(self, matrix: Matrix) -> bool:
        return self._space.contains(matrix.vectorize())

    def coordinates(self, matrix: Matrix) -> Optional[List[GaussianRational]]:
        return self._space.coordinates(matrix.vectorize())

    def from_coordinates(self, coordinates: Iterable[Any]) -> Matrix:
        total = Matrix.zeros(self._n, self._n)
        for c, b in zip(coordinates, self.basis()):
            total = total + b * c
        return total

    def intersect(self, other: "OperatorSpace") -> "OperatorSpace":
        return OperatorSpace(self._n, self._space.intersect(other._space))

    def sum(self, other: "OperatorSpace") -> "OperatorSpace":
        return OperatorSpace(self._n, self._space.sum(other._space))

    def conjugate(self) -> "OperatorSpace":
        return OperatorSpace(self._n, self._space.conjugate())

    def real_form(self) -> "OperatorSpace":
        """The conjugation-stable part; its canonical basis is rational."""
        return OperatorSpace(self._n, self._space.real_part())

    def is_closed_under_bracket(self) -> bool:
        basis = self.basis()
        return all(self.contains(a @ b - b @ a) for a in basis for b in basis)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, OperatorSpace):
            return NotImplemented
        return self._n == other._n and self._space == other._space

    def __hash__(self) -> int:
        return hash((self._n, self._space))

    def __repr__(self) -> str:
        return f"OperatorSpace(n={self._n}, dim={self.dim})"
