"""
Mixed Hodge Structure Module

The MixedHodgeStructure value type, its validation and Hodge numbers.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from mhskit.errors import NotMixedHodgeStructureError, NotPureError, StructureError
from mhskit.linalg.filtration import DecreasingFiltration, GradedPiece, IncreasingFiltration
from mhskit.linalg.matrix import Matrix

logger = logging.getLogger(__name__)


@dataclass
class ValidationReport:
    """Outcome of validate_mhs. Failures name the weight l and Hodge index p (or p, q)."""
    valid: bool
    failures: List[Dict[str, Any]] = field(default_factory=list)
    thorough: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {'valid': self.valid, 'failures': self.failures, 'thorough': self.thorough}


class HodgeNumbers:
    """h^{p,q} for the (p, q) with nonzero value."""

    def __init__(self, values: Mapping[Tuple[int, int], int]):
        self._values = {(int(p), int(q)): int(h) for (p, q), h in values.items() if h}
        for (p, q), h in self._values.items():
            if h < 0:
                raise StructureError(f"Negative Hodge number h^{p},{q}")

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self._values.get(key, 0)

    def items(self):
        return sorted(self._values.items())

    def total(self) -> int:
        return sum(self._values.values())

    def weight_dimensions(self) -> Dict[int, int]:
        result: Dict[int, int] = {}
        for (p, q), h in self._values.items():
            result[p + q] = result.get(p + q, 0) + h
        return result

    def is_symmetric(self) -> bool:
        return all(self[(q, p)] == h for (p, q), h in self._values.items())

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, HodgeNumbers):
            return NotImplemented
        return self._values == other._values

    def __repr__(self) -> str:
        return f"HodgeNumbers({dict(self.items())})"

    def to_dict(self) -> Dict[str, int]:
        return {f"{p},{q}": h for (p, q), h in self.items()}


class GradedPolarization:
    """
    Bilinear forms q_k on Gr_k^W, each given as a Gram matrix on the canonical
    basis of the graded piece.
    """

    def __init__(self, forms: Mapping[int, Matrix]):
        self.forms: Dict[int, Matrix] = {int(k): Matrix(v) for k, v in forms.items()}
        for k, form in self.forms.items():
            if not form.is_square():
                raise StructureError(f"Polarization q_{k} is not square: {form.shape}")
            if not form.is_real():
                raise StructureError(f"Polarization q_{k} must be rational")

    def __getitem__(self, k: int) -> Matrix:
        return self.forms[k]

    def __contains__(self, k: int) -> bool:
        return k in self.forms

    def weights(self) -> List[int]:
        return sorted(self.forms)

    def to_dict(self) -> Dict[str, List[List[str]]]:
        return {str(k): self.forms[k].to_strings() for k in self.weights()}


def _check_shapes(rank: int, weight: IncreasingFiltration, hodge: DecreasingFiltration) -> None:
    if weight.ambient_dim != rank or hodge.ambient_dim != rank:
        raise StructureError(
            f"Filtrations of dimensions {weight.ambient_dim} and {hodge.ambient_dim} for rank {rank}")
    if not weight.is_real():
        raise StructureError("Weight filtration must be spanned by rational vectors")


def _graded_opposedness(l: int, induced: DecreasingFiltration, dim: int) -> List[Dict[str, Any]]:
    failures = []
    conjugate = induced.conjugate()
    pmin, pmax = induced.lowest(), induced.highest()
    for p in range(min(pmin, l - pmax), max(pmax + 1, l + 1 - pmin) + 1):
        a, b = induced[p], conjugate[l + 1 - p]
        if a.dim + b.dim != dim or not a.intersect(b).is_zero():
            failures.append({'weight': l, 'p': p,
                             'reason': f"F^{p} and conj F^{l + 1 - p} are not complementary on Gr_{l}"})
    return failures


def graded_hodge_numbers(l: int, induced: DecreasingFiltration) -> Dict[Tuple[int, int], int]:
    """dim Gr_F^p Gr_Fbar^q on one graded piece, for every (p, q) with a nonzero value."""
    conjugate = induced.conjugate()
    pmin, pmax = induced.lowest(), induced.highest()
    cache: Dict[Tuple[int, int], int] = {}

    def d(p: int, q: int) -> int:
        if (p, q) not in cache:
            cache[(p, q)] = induced[p].intersect(conjugate[q]).dim
        return cache[(p, q)]

    values = {}
    for p in range(pmin, pmax + 1):
        for q in range(pmin, pmax + 1):
            h = d(p, q) - d(p + 1, q) - d(p, q + 1) + d(p + 1, q + 1)
            if h:
                values[(p, q)] = h
    return values


def validate_mhs(rank: int, weight: IncreasingFiltration, hodge: DecreasingFiltration,
                 thorough: bool = False) -> ValidationReport:
    """
    Decide whether (Z^rank, W, F) is a mixed Hodge structure.

    The primary check asks, on every Gr_l^W, that F^p and the conjugate of
    F^{l+1-p} be complementary. With thorough=True the triple-graded pieces
    Gr_F^p Gr_Fbar^q Gr_l^W are also computed and must vanish off p + q = l.

    Raises:
        StructureError: For filtrations of the wrong dimension or a non-rational W
    """
    _check_shapes(rank, weight, hodge)
    failures: List[Dict[str, Any]] = []
    for l, piece in weight.graded_pieces().items():
        induced = piece.induce_decreasing(hodge)
        failures.extend(_graded_opposedness(l, induced, piece.dim))
        if thorough:
            for (p, q), h in graded_hodge_numbers(l, induced).items():
                if p + q != l:
                    failures.append({'weight': l, 'p': p, 'q': q,
                                     'reason': f"Gr_F^{p} Gr_Fbar^{q} Gr_{l} has dimension {h}"})
    if failures:
        logger.debug("validate_mhs: %d failures", len(failures))
    return ValidationReport(valid=not failures, failures=failures, thorough=thorough)


class MixedHodgeStructure:
    """
    A mixed Hodge structure on the lattice Z^rank.

    The weight filtration is rational, the Hodge filtration lives over Q(i).
    Construction validates the axioms and raises NotMixedHodgeStructureError on
    failure; graded polarizations are optional and checked separately.
    """

    def __init__(self, rank: int, weight: IncreasingFiltration, hodge: DecreasingFiltration,
                 polarizations: Optional[GradedPolarization] = None):
        report = validate_mhs(rank, weight, hodge)
        if not report.valid:
            first = report.failures[0]
            raise NotMixedHodgeStructureError(
                f"Not a mixed Hodge structure: {first['reason']} ({len(report.failures)} failures)")
        self.rank = rank
        self.weight = weight
        self.hodge = hodge
        self.polarizations = polarizations
        self._pieces: Optional[Dict[int, GradedPiece]] = None

    def __repr__(self) -> str:
        return f"MixedHodgeStructure(rank={self.rank}, weights={self.weight.indices})"

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, MixedHodgeStructure):
            return NotImplemented
        return (self.rank, self.weight, self.hodge) == (other.rank, other.weight, other.hodge)

    def __hash__(self) -> int:
        return hash((self.rank, self.weight, self.hodge))

    @property
    def weights(self) -> List[int]:
        return self.weight.indices

    def graded_pieces(self) -> Dict[int, GradedPiece]:
        if self._pieces is None:
            self._pieces = self.weight.graded_pieces()
        return self._pieces

    def graded_piece(self, k: int) -> GradedPiece:
        return self.graded_pieces().get(k) or self.weight.graded_piece(k)

    def graded_hodge(self, k: int) -> DecreasingFiltration:
        """The Hodge filtration induced on Gr_k^W, in its canonical coordinates."""
        return self.graded_piece(k).induce_decreasing(self.hodge)

    def is_pure(self) -> bool:
        return len(self.weights) <= 1

    def pure_weight(self) -> int:
        if not self.is_pure():
            raise NotPureError(f"Structure has weights {self.weights}")
        return self.weights[0] if self.weights else 0

    def pure_piece(self, k: int) -> "MixedHodgeStructure":
        """Gr_k^W as a pure Hodge structure of weight k in its canonical coordinates."""
        piece = self.graded_piece(k)
        forms = None
        if self.polarizations is not None and k in self.polarizations:
            forms = GradedPolarization({k: self.polarizations[k]})
        return MixedHodgeStructure(piece.dim, IncreasingFiltration.trivial(piece.dim, k),
                                   self.graded_hodge(k), forms)

    def with_hodge(self, hodge: DecreasingFiltration) -> "MixedHodgeStructure":
        return MixedHodgeStructure(self.rank, self.weight, hodge, self.polarizations)

    def with_polarizations(self, polarizations: Optional[GradedPolarization]) -> "MixedHodgeStructure":
        return MixedHodgeStructure(self.rank, self.weight, self.hodge, polarizations)

    def transformed(self, matrix: Matrix) -> "MixedHodgeStructure":
        """(g W, g F) for an invertible rational g; the graded polarizations are dropped."""
        return MixedHodgeStructure(self.rank, self.weight.apply(matrix), self.hodge.apply(matrix))


def hodge_numbers(mhs: MixedHodgeStructure) -> HodgeNumbers:
    values: Dict[Tuple[int, int], int] = {}
    for k in mhs.weights:
        for (p, q), h in graded_hodge_numbers(k, mhs.graded_hodge(k)).items():
            if p + q == k:
                values[(p, q)] = values.get((p, q), 0) + h
    return HodgeNumbers(values)
