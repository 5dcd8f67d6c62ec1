"""
Grading Module

Gradings of a weight filtration (points of the splitting variety S(W)), the
unipotent transport between two of them and the chart of S(W) used to report
coordinates.
"""

import logging
from typing import Any, Dict, List, Mapping, Optional, Sequence

from mhskit.errors import InvariantViolation, StructureError
from mhskit.hodge.bigrading import Bigrading
from mhskit.linalg.filtration import IncreasingFiltration
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.operators import OperatorSpace
from mhskit.linalg.scalars import GaussianRational
from mhskit.linalg.subspace import Subspace, sum_all

logger = logging.getLogger(__name__)


class GradingOperator:
    """
    A semisimple T with integer eigenvalues, given by its eigenspaces.

    The grading splits the filtration W_l = sum of eigenspaces E_k, k <= l.
    """

    def __init__(self, eigenspaces: Mapping[int, Subspace]):
        spaces = {int(l): s for l, s in sorted(eigenspaces.items()) if not s.is_zero()}
        if not spaces:
            raise StructureError("A grading needs at least one eigenspace")
        n = next(iter(spaces.values())).ambient_dim
        if sum(s.dim for s in spaces.values()) != n or not sum_all(spaces.values(), n).is_full():
            raise StructureError("Eigenspaces do not decompose the space")
        self.ambient_dim = n
        self.eigenspaces: Dict[int, Subspace] = spaces
        self._basis = Matrix.hstack([s.column_basis() for s in spaces.values()])
        self._inverse = self._basis.inverse()
        values: List[int] = []
        for l, s in spaces.items():
            values.extend([l] * s.dim)
        self.matrix = self._basis @ Matrix.diag(values) @ self._inverse

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, GradingOperator):
            return NotImplemented
        return self.eigenspaces == other.eigenspaces

    def __hash__(self) -> int:
        return hash(tuple(self.eigenspaces.items()))

    def __repr__(self) -> str:
        return f"GradingOperator({ {l: s.dim for l, s in self.eigenspaces.items()} })"

    @property
    def eigenvalues(self) -> List[int]:
        return list(self.eigenspaces)

    def projection(self, l: int) -> Matrix:
        """The projection onto E_l along the other eigenspaces."""
        start = 0
        for k, space in self.eigenspaces.items():
            if k == l:
                block = Matrix.zeros(self.ambient_dim, self.ambient_dim)
                for i in range(start, start + space.dim):
                    block = block.with_entry(i, i, 1)
                return self._basis @ block @ self._inverse
            start += space.dim
        return Matrix.zeros(self.ambient_dim, self.ambient_dim)

    def weight_filtration(self) -> IncreasingFiltration:
        steps, current = {}, Subspace.zero(self.ambient_dim)
        for l, space in self.eigenspaces.items():
            current = current.sum(space)
            steps[l] = current
        return IncreasingFiltration(self.ambient_dim, steps)

    def splits(self, weight: IncreasingFiltration) -> bool:
        return self.weight_filtration() == weight

    def conjugate(self) -> "GradingOperator":
        return GradingOperator({l: s.conjugate() for l, s in self.eigenspaces.items()})

    def is_real(self) -> bool:
        return all(s.is_real() for s in self.eigenspaces.values())

    def conjugated_by(self, g: Matrix) -> "GradingOperator":
        """Ad(g) T = g T g^-1, whose eigenspaces are g E_l."""
        return GradingOperator({l: s.apply(g) for l, s in self.eigenspaces.items()})


def grading_from_bigrading(bigrading: Bigrading) -> GradingOperator:
    """T acting by p + q on J^{p,q}."""
    spaces: Dict[int, Subspace] = {}
    for (p, q), piece in bigrading.pieces.items():
        spaces[p + q] = spaces.get(p + q, Subspace.zero(bigrading.ambient_dim)).sum(piece)
    return GradingOperator(spaces)


def standard_grading(weight: IncreasingFiltration) -> GradingOperator:
    """The rational grading whose l-eigenspace is spanned by the canonical lifts of the Gr_l basis."""
    spaces = {l: Subspace.column_span(piece.lift) for l, piece in weight.graded_pieces().items()}
    return GradingOperator(spaces)


def unipotent_transport(source: GradingOperator, target: GradingOperator) -> Matrix:
    """
    The unique u in exp(W_{-1} End) with Ad(u) source = target.

    u = sum_l P'_l P_l with P, P' the eigenprojections; u sends E_l onto E'_l
    and moves vectors of W_l only by W_{l-1}.

    Raises:
        StructureError: If the gradings split different filtrations
    """
    weight = source.weight_filtration()
    if not target.splits(weight):
        raise StructureError("Gradings split different weight filtrations")
    n = source.ambient_dim
    u = Matrix.zeros(n, n)
    for l in source.eigenvalues:
        u = u + target.projection(l) @ source.projection(l)
    if not OperatorSpace.filtration_shifting(weight, -1).contains(u - Matrix.identity(n)):
        raise InvariantViolation("Transport between gradings is not unipotent")
    if u @ source.matrix != target.matrix @ u:
        raise InvariantViolation("Transport does not intertwine the gradings")
    return u


class SplittingChart:
    """
    Coordinates on S(W): T -> log of the transport from a base grading, read
    in the canonical basis of W_{-1} End.

    The base grading is standard_grading(W) unless given. A rational W gives a
    rational basis of directions, so real gradings get real coordinates.
    """

    def __init__(self, weight: IncreasingFiltration, base: Optional[GradingOperator] = None):
        self.weight = weight
        self.base = base or standard_grading(weight)
        if not self.base.splits(weight):
            raise StructureError("Chart base point does not split the weight filtration")
        self.directions = OperatorSpace.filtration_shifting(weight, -1)

    @property
    def dim(self) -> int:
        return self.directions.dim

    def coordinates(self, grading: GradingOperator) -> List[GaussianRational]:
        logarithm = unipotent_transport(self.base, grading).log_unipotent()
        coordinates = self.directions.coordinates(logarithm)
        if coordinates is None:
            raise InvariantViolation("Logarithm of a transport left W_{-1} End")
        return coordinates

    def grading_at(self, coordinates: Sequence[Any]) -> GradingOperator:
        if len(coordinates) != self.dim:
            raise StructureError(f"Chart has dimension {self.dim}, got {len(coordinates)} coordinates")
        logarithm = self.directions.from_coordinates(coordinates)
        return self.base.conjugated_by(logarithm.exp_nilpotent())
