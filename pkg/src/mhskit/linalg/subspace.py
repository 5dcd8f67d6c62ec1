"""
Subspace Module

Subspaces of Q(i)^n stored by their reduced row-echelon basis, so equal
subspaces have identical representations.
"""

from typing import Any, Iterable, List, Optional, Sequence

from mhskit.errors import StructureError
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import ONE, ZERO, GaussianRational


class Subspace:
    """
    A subspace of the column space Q(i)^ambient_dim.

    The basis is a dim x ambient_dim matrix in reduced row-echelon form whose
    rows are the basis vectors.
    """

    __slots__ = ("_ambient_dim", "_basis", "_pivots")

    def __init__(self, ambient_dim: int, vectors: Any = None):
        self._ambient_dim = ambient_dim
        if vectors is None:
            vectors = Matrix.zeros(0, ambient_dim)
        elif not isinstance(vectors, Matrix):
            vectors = Matrix.from_rows([list(v) for v in vectors], ambient_dim)
        if vectors.cols != ambient_dim:
            raise StructureError(f"Vectors of length {vectors.cols} in ambient dimension {ambient_dim}")
        self._basis, self._pivots = vectors.rref()

    # --- constructors -------------------------------------------------------

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Any]], ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, [list(v) for v in vectors])

    @classmethod
    def column_span(cls, matrix: Matrix) -> "Subspace":
        """The span of the columns of a matrix."""
        return cls(matrix.rows, matrix.T)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @classmethod
    def coordinate(cls, ambient_dim: int, indices: Iterable[int]) -> "Subspace":
        """The span of the standard basis vectors e_i for i in indices."""
        identity = Matrix.identity(ambient_dim)
        return cls(ambient_dim, [identity.row(i) for i in sorted(set(indices))])

    # --- access -------------------------------------------------------------

    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    @property
    def dim(self) -> int:
        return self._basis.rows

    @property
    def basis(self) -> Matrix:
        return self._basis

    @property
    def pivots(self) -> List[int]:
        return list(self._pivots)

    def vectors(self) -> List[List[GaussianRational]]:
        return self._basis.row_list()

    def column_basis(self) -> Matrix:
        """The basis as an ambient_dim x dim matrix of column vectors."""
        return self._basis.T

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self._ambient_dim

    def _check(self, other: "Subspace") -> None:
        if self._ambient_dim != other._ambient_dim:
            raise StructureError(
                f"Ambient dimension mismatch: {self._ambient_dim} vs {other._ambient_dim}")

    # --- lattice operations -------------------------------------------------

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self._ambient_dim, Matrix.vstack([self._basis, other._basis]))

    __add__ = sum

    def annihilator(self) -> "Subspace":
        """{x : b . x = 0 for every basis row b}, for the bilinear (unconjugated) pairing."""
        if self.dim == 0:
            return Subspace.full(self._ambient_dim)
        return Subspace.column_span(self._basis.nullspace())

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self._ambient_dim)
        return self.annihilator().sum(other.annihilator()).annihilator()

    __and__ = intersect

    def conjugate(self) -> "Subspace":
        return Subspace(self._ambient_dim, self._basis.conjugate())

    def is_real(self) -> bool:
        """True when the subspace is stable under conjugation (its canonical basis is rational)."""
        return self._basis.is_real()

    def real_part(self) -> "Subspace":
        """The largest conjugation-stable subspace, self intersected with its conjugate."""
        return self.intersect(self.conjugate())

    def contains(self, vector: Sequence[Any]) -> bool:
        vector = [GaussianRational.of(x) for x in vector]
        if len(vector) != self._ambient_dim:
            raise StructureError(f"Vector of length {len(vector)} in ambient dimension {self._ambient_dim}")
        residual = list(vector)
        for row, p in zip(self._basis.row_list(), self._pivots):
            factor = residual[p]
            if factor:
                residual = [a - factor * b for a, b in zip(residual, row)]
        return not any(residual)

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.vectors())

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._ambient_dim == other._ambient_dim and self._basis == other._basis

    def __hash__(self) -> int:
        return hash((self._ambient_dim, self._basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self._ambient_dim}, basis={self._basis.to_strings()})"

    def coordinates(self, vector: Sequence[Any]) -> Optional[List[GaussianRational]]:
        """Coefficients of vector in the canonical basis, or None if it lies outside."""
        if not self.contains(vector):
            return None
        vector = [GaussianRational.of(x) for x in vector]
        return [vector[p] for p in self._pivots]

    # --- maps ---------------------------------------------------------------

    def apply(self, matrix: Matrix) -> "Subspace":
        """The image of the subspace under a matrix acting on columns."""
        if matrix.cols != self._ambient_dim:
            raise StructureError(f"Cannot apply a {matrix.shape} matrix to ambient dimension {self._ambient_dim}")
        return Subspace(matrix.rows, self._basis @ matrix.T)

    def preimage(self, matrix: Matrix) -> "Subspace":
        """{x : matrix @ x lies in self}."""
        if matrix.rows != self._ambient_dim:
            raise StructureError(f"Cannot pull back along a {matrix.shape} matrix")
        conditions = self.annihilator().basis
        if conditions.rows == 0:
            return Subspace.full(matrix.cols)
        return Subspace.column_span((conditions @ matrix).nullspace())

    def quotient_map(self) -> Matrix:
        """
        The projection onto ambient/self in complement coordinates.

        Coordinates are the non-pivot columns of the canonical basis: the j-th
        coordinate of v is v[c_j] after clearing the pivot entries of v with the
        basis rows. The kernel is exactly self.
        """
        n = self._ambient_dim
        free = [c for c in range(n) if c not in self._pivots]
        rows = []
        for c in free:
            functional = [ZERO] * n
            functional[c] = ONE
            for basis_row, p in zip(self._basis.row_list(), self._pivots):
                functional[p] = functional[p] - basis_row[c]
            rows.append(functional)
        return Matrix.from_rows(rows, n)

    def quotient_lift(self) -> Matrix:
        """A section of quotient_map: complement coordinate j goes to e_{c_j}."""
        n = self._ambient_dim
        free = [c for c in range(n) if c not in self._pivots]
        lift = Matrix.zeros(n, len(free))
        for j, c in enumerate(free):
            lift = lift.with_entry(c, j, ONE)
        return lift

    def quotient_image(self, modulo: "Subspace") -> "Subspace":
        """The image of self in ambient/modulo, in modulo's complement coordinates."""
        self._check(modulo)
        return self.apply(modulo.quotient_map())

    def complement_in(self, container: "Subspace") -> List[List[GaussianRational]]:
        """Vectors of container's canonical basis completing self to container (self <= container)."""
        self._check(container)
        chosen: List[List[GaussianRational]] = []
        current = self
        for vector in container.vectors():
            if not current.contains(vector):
                chosen.append(vector)
                current = current.sum(Subspace(self._ambient_dim, [vector]))
        return chosen


def sum_all(spaces: Iterable[Subspace], ambient_dim: int) -> Subspace:
    result = Subspace.zero(ambient_dim)
    for space in spaces:
        result = result.sum(space)
    return result


def intersect_all(spaces: Iterable[Subspace], ambient_dim: int) -> Subspace:
    result = Subspace.full(ambient_dim)
    for space in spaces:
        result = result.intersect(space)
    return result
