"""
Retraction Module

Retractions of the mixed period domain onto its real-split locus. A point of
the real-split locus is a graded point (the Hodge filtrations of the graded
pieces) together with a real grading of W.

Two retractions are provided behind one interface: the delta retraction
F -> e^{-i delta} F and the sl2 retraction F -> e^{zeta} e^{-i delta} F, where
zeta is a universal Lie polynomial in the Hodge components of delta.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Tuple

from mhskit.errors import InvariantViolation, StructureError, UnsupportedKindError
from mhskit.hodge.bigrading import deligne_bigrading, is_split_over_R
from mhskit.hodge.structure import MixedHodgeStructure
from mhskit.linalg.filtration import DecreasingFiltration, IncreasingFiltration
from mhskit.linalg.matrix import Matrix, bracket
from mhskit.linalg.scalars import GaussianRational
from mhskit.linalg.subspace import Subspace
from mhskit.splittings.delta import delta_splitting, hodge_components
from mhskit.splittings.grading import GradingOperator, grading_from_bigrading

logger = logging.getLogger(__name__)

RETRACTIONS = ("delta", "sl2")
LOWEST_DEGREE = -5


@dataclass
class RealSplitPoint:
    """
    The pair (graded point, real grading) describing a filtration split over R.

    graded_point maps each weight k to the Hodge filtration of Gr_k^W in its
    canonical coordinates; grading is a real grading of W.
    """
    weight: IncreasingFiltration
    graded_point: Dict[int, DecreasingFiltration]
    grading: GradingOperator

    def __post_init__(self):
        if not self.grading.splits(self.weight):
            raise StructureError("Grading does not split the weight filtration")
        if not self.grading.is_real():
            raise StructureError("A real split point needs a real grading")

    def assemble(self) -> DecreasingFiltration:
        """
        F^p = sum over k of s_k(F^p Gr_k), s_k identifying Gr_k with the k-eigenspace.
        """
        n = self.weight.ambient_dim
        steps: Dict[int, Subspace] = {}
        indices = set()
        for hodge in self.graded_point.values():
            indices.update(range(hodge.lowest(), hodge.highest() + 2))
        sections = {}
        for k, piece in self.weight.graded_pieces().items():
            eigenspace = self.grading.eigenspaces[k].column_basis()
            sections[k] = eigenspace @ (piece.projection @ eigenspace).inverse()
        for p in indices:
            total = Subspace.zero(n)
            for k, hodge in self.graded_point.items():
                total = total.sum(hodge[p].apply(sections[k]))
            steps[p] = total
        return DecreasingFiltration(n, steps)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'graded_point': {str(k): {str(p): s.basis.to_strings() for p, s in f}
                             for k, f in sorted(self.graded_point.items())},
            'grading': self.grading.matrix.to_strings(),
        }


def graded_point(mhs: MixedHodgeStructure) -> Dict[int, DecreasingFiltration]:
    return {k: mhs.graded_hodge(k) for k in mhs.weights}


def split_point(mhs: MixedHodgeStructure) -> RealSplitPoint:
    """The RealSplitPoint of a structure already split over R."""
    if not is_split_over_R(mhs):
        raise StructureError("Structure is not split over R")
    grading = grading_from_bigrading(deligne_bigrading(mhs))
    return RealSplitPoint(mhs.weight, graded_point(mhs), grading)


class Retraction(ABC):
    """A retraction of the mixed period domain onto its real-split locus."""

    name: str = ""

    @abstractmethod
    def split_filtration(self, mhs: MixedHodgeStructure) -> DecreasingFiltration:
        """The Hodge filtration of the retracted structure."""
        pass

    def retract(self, mhs: MixedHodgeStructure) -> RealSplitPoint:
        hodge = self.split_filtration(mhs)
        retracted = mhs.with_hodge(hodge)
        if not is_split_over_R(retracted):
            raise InvariantViolation(f"{self.name} retraction did not land in the real-split locus")
        return split_point(retracted)


class DeltaRetraction(Retraction):
    name = "delta"

    def split_filtration(self, mhs: MixedHodgeStructure) -> DecreasingFiltration:
        return mhs.hodge.apply(delta_splitting(mhs).twist())


def _half_i(numerator: int, denominator: int) -> GaussianRational:
    return GaussianRational(0, Fraction(numerator, denominator))


def unsupported_bidegrees(components: Dict[Tuple[int, int], Matrix]) -> List[Tuple[int, int]]:
    """
    Bidegrees of total degree below LOWEST_DEGREE at which zeta can be nonzero.

    Every component has total degree -2 or below, so such terms come from an
    off-diagonal component that deep, a nonzero bracket of two components
    that deep, or a nonzero triple bracket. A diagonal component enters zeta
    with coefficient zero.
    """
    nonzero = [(key, value) for key, value in sorted(components.items()) if not value.is_zero()]
    deep = {key for key, _ in nonzero if sum(key) < LOWEST_DEGREE and key[0] != key[1]}
    for (a, x), (b, y) in combinations(nonzero, 2):
        inner = bracket(x, y)
        if inner.is_zero():
            continue
        degree = (a[0] + b[0], a[1] + b[1])
        if sum(degree) < LOWEST_DEGREE:
            deep.add(degree)
            continue
        for c, z in nonzero:
            if not bracket(z, inner).is_zero():
                deep.add((degree[0] + c[0], degree[1] + c[1]))
    return sorted(deep)


def sl2_correction(delta: Matrix, components: Dict[Tuple[int, int], Matrix]) -> Matrix:
    """
    zeta as a Lie polynomial in the Hodge components delta^{a,b} of delta.

    Components are taken relative to the bigrading of the delta-split
    structure. The closed form holds through total degree -5 and for
    diagonal components of any degree.

    Raises:
        UnsupportedKindError: If zeta may have a term of total degree -6 or below
    """
    n = delta.rows
    zero = Matrix.zeros(n, n)

    def d(a: int, b: int) -> Matrix:
        return components.get((a, b), zero)

    deep = unsupported_bidegrees(components)
    if deep:
        raise UnsupportedKindError(
            f"sl2 correction is known through total degree {LOWEST_DEGREE}, delta reaches {deep}")
    terms: List[Matrix] = [
        d(-1, -2) * _half_i(-1, 2) + d(-2, -1) * _half_i(1, 2),
        d(-1, -3) * _half_i(-3, 4) + d(-3, -1) * _half_i(3, 4),
        d(-1, -4) * _half_i(-5, 8) + d(-4, -1) * _half_i(5, 8),
        d(-2, -3) * _half_i(-3, 8) - bracket(d(-1, -1), d(-1, -2)) / 8,
        d(-3, -2) * _half_i(3, 8) - bracket(d(-1, -1), d(-2, -1)) / 8,
    ]
    zeta = zero
    for term in terms:
        zeta = zeta + term
    if not zeta.is_real():
        raise InvariantViolation("sl2 correction is not real")
    return zeta


class Sl2Retraction(Retraction):
    name = "sl2"

    def split_filtration(self, mhs: MixedHodgeStructure) -> DecreasingFiltration:
        delta = delta_splitting(mhs)
        split_hodge = mhs.hodge.apply(delta.twist())
        split_bigrading = deligne_bigrading(mhs.with_hodge(split_hodge))
        zeta = sl2_correction(delta.matrix, hodge_components(delta.matrix, split_bigrading))
        if zeta.is_zero():
            return split_hodge
        logger.debug("sl2 correction: %s", zeta.to_strings())
        return split_hodge.apply(zeta.exp_nilpotent())


def get_retraction(name: str) -> Retraction:
    """Look up a retraction by its selector, "delta" or "sl2"."""
    if name == "delta":
        return DeltaRetraction()
    if name == "sl2":
        return Sl2Retraction()
    raise UnsupportedKindError(f"Unknown retraction {name!r}; expected one of {RETRACTIONS}")


def delta_retract(mhs: MixedHodgeStructure) -> RealSplitPoint:
    return DeltaRetraction().retract(mhs)


def sl2_retract(mhs: MixedHodgeStructure) -> RealSplitPoint:
    return Sl2Retraction().retract(mhs)
