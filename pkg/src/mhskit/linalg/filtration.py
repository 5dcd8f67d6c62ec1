"""
Filtration Module

Finite increasing and decreasing filtrations by subspaces, stored by their jump
indices, and the graded pieces of an increasing filtration.
"""

import logging
from typing import Any, Dict, Iterator, List, Mapping, Sequence, Tuple

from mhskit.errors import StructureError
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.subspace import Subspace

logger = logging.getLogger(__name__)


def _as_subspace(space: Any, ambient_dim: int) -> Subspace:
    if isinstance(space, Subspace):
        if space.ambient_dim != ambient_dim:
            raise StructureError(
                f"Step of ambient dimension {space.ambient_dim} in a filtration of dimension {ambient_dim}")
        return space
    if isinstance(space, Matrix):
        return Subspace(ambient_dim, space)
    return Subspace(ambient_dim, [list(v) for v in space])


class IncreasingFiltration:
    """
    W_k increasing in k. Zero below the lowest stored index, full from the top.

    Only indices k with W_k != W_{k-1} are stored; a lookup between jumps
    returns the nearest stored step below. When the highest given step is not
    the full space, a full step is appended one index above it.
    """

    __slots__ = ("_ambient_dim", "_steps")

    def __init__(self, ambient_dim: int, steps: Mapping[int, Any]):
        self._ambient_dim = ambient_dim
        ordered = sorted((int(k), _as_subspace(v, ambient_dim)) for k, v in steps.items())
        kept: List[Tuple[int, Subspace]] = []
        previous = Subspace.zero(ambient_dim)
        for index, space in ordered:
            if not previous <= space:
                raise StructureError(f"Increasing filtration is not nested at index {index}")
            if space != previous:
                kept.append((index, space))
                previous = space
        if not previous.is_full():
            top = kept[-1][0] + 1 if kept else 0
            kept.append((top, Subspace.full(ambient_dim)))
        self._steps = tuple(kept)

    @classmethod
    def trivial(cls, ambient_dim: int, weight: int) -> "IncreasingFiltration":
        """The filtration with a single jump at weight: W_weight = V, W_{weight-1} = 0."""
        return cls(ambient_dim, {weight: Subspace.full(ambient_dim)})

    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    @property
    def indices(self) -> List[int]:
        """The jump indices; equivalently the weights k with Gr_k nonzero."""
        return [k for k, _ in self._steps]

    def steps(self) -> List[Tuple[int, Subspace]]:
        return list(self._steps)

    def __getitem__(self, k: int) -> Subspace:
        result = Subspace.zero(self._ambient_dim)
        for index, space in self._steps:
            if index > k:
                break
            result = space
        return result

    def __iter__(self) -> Iterator[Tuple[int, Subspace]]:
        return iter(self._steps)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, IncreasingFiltration):
            return NotImplemented
        return self._ambient_dim == other._ambient_dim and self._steps == other._steps

    def __hash__(self) -> int:
        return hash((self._ambient_dim, self._steps))

    def __repr__(self) -> str:
        return f"IncreasingFiltration({dict((k, s.dim) for k, s in self._steps)})"

    def lowest(self) -> int:
        return self._steps[0][0] if self._steps else 0

    def highest(self) -> int:
        return self._steps[-1][0] if self._steps else 0

    def is_real(self) -> bool:
        return all(space.is_real() for _, space in self._steps)

    def is_trivial(self) -> bool:
        return len(self._steps) <= 1

    def shifted(self, shift: int) -> "IncreasingFiltration":
        """The filtration k -> W_{k - shift}, i.e. every jump moves up by shift."""
        return IncreasingFiltration(self._ambient_dim, {k + shift: s for k, s in self._steps})

    def apply(self, matrix: Matrix) -> "IncreasingFiltration":
        return IncreasingFiltration(matrix.rows, {k: s.apply(matrix) for k, s in self._steps})

    def graded_piece(self, k: int) -> "GradedPiece":
        return GradedPiece(self[k], self[k - 1], k)

    def graded_pieces(self) -> Dict[int, "GradedPiece"]:
        return {k: self.graded_piece(k) for k in self.indices}

    def graded_dimensions(self) -> Dict[int, int]:
        return {k: self[k].dim - self[k - 1].dim for k in self.indices}

    def is_preserved_by(self, matrix: Matrix, shift: int = 0) -> bool:
        """True when matrix maps W_k into W_{k+shift} for every k."""
        for k, space in self._steps:
            if not space.apply(matrix) <= self[k + shift]:
                return False
        return True

    def to_dict(self) -> Dict[int, Subspace]:
        return dict(self._steps)


class DecreasingFiltration:
    """
    F^p decreasing in p. Full below the lowest stored index, zero above the highest.

    Only indices p with F^p != F^{p+1} are stored; a lookup returns the stored
    step with the smallest index >= p. When the lowest given step is not the
    full space, a full step is prepended one index below it.
    """

    __slots__ = ("_ambient_dim", "_steps")

    def __init__(self, ambient_dim: int, steps: Mapping[int, Any]):
        self._ambient_dim = ambient_dim
        ordered = sorted(((int(p), _as_subspace(v, ambient_dim)) for p, v in steps.items()), reverse=True)
        kept: List[Tuple[int, Subspace]] = []
        previous = Subspace.zero(ambient_dim)
        for index, space in ordered:
            if not previous <= space:
                raise StructureError(f"Decreasing filtration is not nested at index {index}")
            if space != previous:
                kept.append((index, space))
                previous = space
        if ambient_dim and not previous.is_full():
            bottom = kept[-1][0] - 1 if kept else 0
            kept.append((bottom, Subspace.full(ambient_dim)))
        self._steps = tuple(reversed(kept))

    @classmethod
    def trivial(cls, ambient_dim: int, p: int) -> "DecreasingFiltration":
        """F^p = V and F^{p+1} = 0."""
        return cls(ambient_dim, {p: Subspace.full(ambient_dim)})

    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    @property
    def indices(self) -> List[int]:
        return [p for p, _ in self._steps]

    def steps(self) -> List[Tuple[int, Subspace]]:
        return list(self._steps)

    def __getitem__(self, p: int) -> Subspace:
        for index, space in self._steps:
            if index >= p:
                return space
        return Subspace.zero(self._ambient_dim)

    def __iter__(self) -> Iterator[Tuple[int, Subspace]]:
        return iter(self._steps)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, DecreasingFiltration):
            return NotImplemented
        return self._ambient_dim == other._ambient_dim and self._steps == other._steps

    def __hash__(self) -> int:
        return hash((self._ambient_dim, self._steps))

    def __repr__(self) -> str:
        return f"DecreasingFiltration({dict((p, s.dim) for p, s in self._steps)})"

    def lowest(self) -> int:
        """The largest p with F^p = V."""
        return self._steps[0][0] if self._steps else 0

    def highest(self) -> int:
        """The largest p with F^p != 0."""
        return self._steps[-1][0] if self._steps else 0

    def conjugate(self) -> "DecreasingFiltration":
        return DecreasingFiltration(self._ambient_dim, {p: s.conjugate() for p, s in self._steps})

    def apply(self, matrix: Matrix) -> "DecreasingFiltration":
        """g . F for an invertible matrix g."""
        return DecreasingFiltration(matrix.rows, {p: s.apply(matrix) for p, s in self._steps})

    def shifted(self, shift: int) -> "DecreasingFiltration":
        """The filtration p -> F^{p - shift}."""
        return DecreasingFiltration(self._ambient_dim, {p + shift: s for p, s in self._steps})

    def is_preserved_by(self, matrix: Matrix, shift: int = 0) -> bool:
        """True when matrix maps F^p into F^{p+shift} for every p."""
        for p in range(self.lowest() - abs(shift) - 1, self.highest() + 1):
            if not self[p].apply(matrix) <= self[p + shift]:
                return False
        return True

    def to_dict(self) -> Dict[int, Subspace]:
        return dict(self._steps)


class GradedPiece:
    """
    Gr_k = W_k / W_{k-1} with explicit coordinates.

    The basis of Gr_k is the reduced-echelon basis of the image of W_k in the
    complement coordinates of V / W_{k-1}. ``projection`` (dim x n) reads these
    coordinates off vectors of W_k; ``lift`` (n x dim) sends them back to
    canonical representatives in W_k.
    """

    def __init__(self, upper: Subspace, lower: Subspace, index: int = 0):
        if not lower <= upper:
            raise StructureError(f"Graded piece {index}: lower step is not contained in the upper step")
        self.index = index
        self.upper = upper
        self.lower = lower
        n = upper.ambient_dim
        quotient = lower.quotient_map()
        image = upper.apply(quotient)
        select = Matrix.zeros(image.dim, quotient.rows)
        for i, pivot in enumerate(image.pivots):
            select = select.with_entry(i, pivot, 1)
        self.projection = select @ quotient
        if image.dim:
            upper_columns = upper.column_basis()
            coefficients = (quotient @ upper_columns).solve(image.basis.T)
            self.lift = upper_columns @ coefficients
        else:
            self.lift = Matrix.zeros(n, 0)

    @property
    def dim(self) -> int:
        return self.projection.rows

    @property
    def ambient_dim(self) -> int:
        return self.upper.ambient_dim

    def project(self, space: Subspace) -> Subspace:
        """The image of space intersected with the upper step."""
        return space.intersect(self.upper).apply(self.projection)

    def induce_decreasing(self, filtration: DecreasingFiltration) -> DecreasingFiltration:
        return DecreasingFiltration(self.dim, {p: self.project(s) for p, s in filtration})

    def induce_increasing(self, filtration: IncreasingFiltration) -> IncreasingFiltration:
        return IncreasingFiltration(self.dim, {k: self.project(s) for k, s in filtration})

    def induce_operator(self, matrix: Matrix) -> Matrix:
        """The endomorphism of Gr_k induced by a matrix preserving both steps."""
        return self.projection @ matrix @ self.lift

    def induce_form(self, form: Matrix) -> Matrix:
        """The Gram matrix of a bilinear form on V restricted to lifts of the Gr_k basis."""
        return self.lift.T @ form @ self.lift


def filtration_from_rows(kind: str, ambient_dim: int, steps: Mapping[Any, Sequence[Sequence[Any]]]):
    """Build an increasing ("weight") or decreasing ("hodge") filtration from lists of row vectors."""
    parsed = {int(k): Subspace(ambient_dim, [list(v) for v in rows]) if rows else Subspace.zero(ambient_dim)
              for k, rows in steps.items()}
    if kind == "weight":
        return IncreasingFiltration(ambient_dim, parsed)
    if kind == "hodge":
        return DecreasingFiltration(ambient_dim, parsed)
    raise StructureError(f"Unknown filtration kind {kind!r}")
