"""
Delta Splitting Module

The algebra L^{-1,-1} of a mixed Hodge structure, Hodge components of
operators and Deligne's real splitting operator delta.
"""

import logging
from fractions import Fraction
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from mhskit.errors import InvariantViolation
from mhskit.hodge.bigrading import Bigrading, deligne_bigrading, is_split_over_R
from mhskit.hodge.structure import MixedHodgeStructure
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.operators import OperatorSpace
from mhskit.linalg.scalars import GaussianRational
from mhskit.splittings.grading import grading_from_bigrading, unipotent_transport

logger = logging.getLogger(__name__)

HALF_I = GaussianRational(0, Fraction(1, 2))


def _elementary(n: int, i: int, j: int) -> Matrix:
    return Matrix.zeros(n, n).with_entry(i, j, 1)


def l_minus1_minus1(mhs: MixedHodgeStructure, bigrading: Bigrading = None) -> OperatorSpace:
    """
    L^{-1,-1}: endomorphisms X with X(I^{p,q}) inside the sum of I^{r,s}, r < p, s < q.

    Spanned by B E_ij B^-1 for the elementary matrices E_ij whose column lies
    in the block of I^{p,q} and whose row lies in a block of I^{r,s} with r < p
    and s < q, B being the bigrading basis.
    """
    bigrading = bigrading or deligne_bigrading(mhs)
    n = mhs.rank
    basis = bigrading.basis_matrix()
    inverse = basis.inverse()
    blocks = bigrading.blocks()
    generators = []
    for (p, q), (c0, c1) in blocks.items():
        for (r, s), (r0, r1) in blocks.items():
            if r < p and s < q:
                for i in range(r0, r1):
                    for j in range(c0, c1):
                        generators.append(basis @ _elementary(n, i, j) @ inverse)
    return OperatorSpace.span(n, generators)


def hodge_components(matrix: Matrix, bigrading: Bigrading) -> Dict[Tuple[int, int], Matrix]:
    """
    Split X as the sum of X^{a,b}, where X^{a,b} maps I^{p,q} into I^{p+a,q+b}.

    Only nonzero components are returned, in the ambient coordinates.
    """
    basis = bigrading.basis_matrix()
    inverse = basis.inverse()
    local = inverse @ matrix @ basis
    blocks = bigrading.blocks()
    n = matrix.rows
    components: Dict[Tuple[int, int], Matrix] = {}
    for (p, q), (c0, c1) in blocks.items():
        for (r, s), (r0, r1) in blocks.items():
            block = local[r0:r1, c0:c1]
            if block.is_zero():
                continue
            key = (r - p, s - q)
            embedded = components.get(key, Matrix.zeros(n, n)).array
            embedded[r0:r1, c0:c1] = block.array
            components[key] = Matrix(embedded)
    return {key: basis @ value @ inverse for key, value in components.items()}


@dataclass(frozen=True)
class DeltaOperator:
    """A real nilpotent operator in (L^{-1,-1})_R."""
    matrix: Matrix

    def twist(self) -> Matrix:
        """e^{-i delta}."""
        return (self.matrix * GaussianRational(0, -1)).exp_nilpotent()

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def to_dict(self) -> Dict[str, Any]:
        return {'delta': self.matrix.to_strings(), 'zero': self.is_zero()}


def delta_splitting(mhs: MixedHodgeStructure) -> DeltaOperator:
    """
    The unique real delta in L^{-1,-1} with (W, e^{-i delta} F) split over R.

    With T the Deligne grading, T = Ad(e^{2 i delta}) conj(T). The transport u
    with Ad(u) T = conj(T) is therefore e^{-2 i delta}, and delta = (i/2) log u.
    Every property of the result is checked before it is returned.

    Raises:
        InvariantViolation: If delta fails to be real, to lie in L^{-1,-1} or to split F
    """
    bigrading = deligne_bigrading(mhs)
    grading = grading_from_bigrading(bigrading)
    u = unipotent_transport(grading, grading.conjugate())
    delta = u.log_unipotent() * HALF_I
    if not delta.is_real():
        raise InvariantViolation("delta is not real")
    if not l_minus1_minus1(mhs, bigrading).contains(delta):
        raise InvariantViolation("delta does not lie in L^{-1,-1}")
    operator = DeltaOperator(delta)
    if not is_split_over_R(mhs.with_hodge(mhs.hodge.apply(operator.twist()))):
        raise InvariantViolation("e^{-i delta} F is not split over R")
    logger.debug("delta splitting: %s", delta.to_strings())
    return operator
