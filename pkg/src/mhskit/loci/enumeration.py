"""
Enumeration Module

Bounded-norm integral Hodge classes. The lattice Hdg_0(V)_Z is pushed to
Gr_0^W, where the weight-0 polarization is positive on (0,0)-classes, and the
short vectors of the resulting Gram matrix are enumerated with fpylll and
checked against their exact norms.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from fpylll import GSO, Enumeration, EnumerationError, EvaluatorStrategy, IntegerMatrix

from mhskit.domains.period_domain import PeriodDomainSpec, membership
from mhskit.errors import StructureError
from mhskit.hodge.hodge_classes import hodge_classes
from mhskit.hodge.structure import MixedHodgeStructure
from mhskit.linalg.filtration import DecreasingFiltration
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import format_scalar, to_fraction

logger = logging.getLogger(__name__)

RADIUS_SLACK = 2.0 ** -20


@dataclass(frozen=True)
class HodgeClass:
    vector: tuple
    norm: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {'vector': list(self.vector), 'norm': format_scalar(self.norm)}


class HodgeClassQuery:
    """
    A mixed Hodge structure, the form q_0 on Gr_0^W and a norm bound d.

    q_0 defaults to the weight-0 graded polarization of the structure.

    Raises:
        StructureError: If d is negative, q_0 is missing or of the wrong size
    """

    def __init__(self, mhs: MixedHodgeStructure, bound: Any, q0: Optional[Matrix] = None):
        self.mhs = mhs
        self.bound = to_fraction(bound)
        if self.bound < 0:
            raise StructureError(f"Norm bound must be nonnegative, got {self.bound}")
        self.piece = mhs.graded_piece(0)
        if q0 is None and self.piece.dim == 0:
            q0 = Matrix.zeros(0, 0)
        elif q0 is None:
            if mhs.polarizations is None or 0 not in mhs.polarizations:
                raise StructureError("No weight-0 polarization to measure Hodge classes with")
            q0 = mhs.polarizations[0]
        if self.piece.dim and (q0.shape != (self.piece.dim, self.piece.dim) or not q0.is_real() or q0 != q0.T):
            raise StructureError(f"q_0 must be a real symmetric {self.piece.dim} x {self.piece.dim} matrix")
        self.q0 = q0

    def __repr__(self) -> str:
        return f"HodgeClassQuery(rank={self.mhs.rank}, bound={self.bound})"


def completed_square(gram: Matrix) -> List[List[Fraction]]:
    """
    Coefficients with x^T G x = sum_i q[i][i] (x_i + sum_{j > i} q[i][j] x_j)^2.

    Raises:
        StructureError: If G is not positive definite
    """
    n = gram.rows
    q = [[gram[i, j].re for j in range(n)] for i in range(n)]
    for i in range(n):
        if q[i][i] <= 0:
            raise StructureError("q_0 is not positive definite on the Hodge classes; the enumeration is infinite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for j in range(k, n):
                q[k][j] -= q[k][i] * q[i][j]
    return q


def _integral_gram(gram: Matrix) -> Tuple[List[List[int]], int]:
    """The Gram matrix scaled by the lcm of its denominators, with the scale."""
    entries = [gram[i, j].re for i in range(gram.rows) for j in range(gram.cols)]
    scale = 1
    for x in entries:
        scale = scale * x.denominator // math.gcd(scale, x.denominator)
    return [[int(gram[i, j].re * scale) for j in range(gram.cols)] for i in range(gram.rows)], scale


def _norm(gram: Matrix, x: Sequence[int]) -> Fraction:
    n = gram.rows
    return sum((gram[i, j].re * x[i] * x[j] for i in range(n) for j in range(n)), Fraction(0))


def short_vectors(gram: Matrix, bound: Fraction, budget: int = 256) -> List[List[int]]:
    """
    All nonzero integer x with x^T G x <= bound, for G positive definite.

    fpylll enumerates the ball of the integral Gram matrix with a slightly
    enlarged radius; every candidate and its negative are then kept only when
    their exact norm is within the bound. The solution budget doubles until
    the enumeration returns fewer solutions than it was allowed.

    Raises:
        StructureError: If G is not positive definite
    """
    n = gram.rows
    completed_square(gram)
    bound = Fraction(bound)
    if n == 0 or bound <= 0:
        return []
    rows, scale = _integral_gram(gram)
    gso = GSO.Mat(IntegerMatrix.from_matrix(rows), flags=GSO.INT_GRAM)
    gso.update_gso()
    radius = float(bound * scale) * (1 + RADIUS_SLACK) + RADIUS_SLACK
    while True:
        enumeration = Enumeration(gso, nr_solutions=budget, strategy=EvaluatorStrategy.BEST_N_SOLUTIONS)
        try:
            solutions = enumeration.enumerate(0, n, radius, 0)
        except EnumerationError:
            solutions = []
        if len(solutions) < budget:
            break
        budget *= 2
        logger.debug("short_vectors: raising the solution budget to %d", budget)
    found = set()
    for _, coefficients in solutions:
        x = tuple(int(round(c)) for c in coefficients)
        if any(x) and _norm(gram, x) <= bound:
            found.add(x)
            found.add(tuple(-v for v in x))
    logger.debug("short_vectors: %d vectors of norm <= %s in rank %d", len(found), bound, n)
    return [list(x) for x in sorted(found)]


def enumerate_hdg0_d(query: HodgeClassQuery) -> List[HodgeClass]:
    """
    The nonzero v in Hdg_0(V)_Z with q_0(v, v) <= d, sorted lexicographically.

    Norms are taken on the Gr_0^W images, which determine the classes since
    Hdg_0 meets W_{-1} trivially.

    Raises:
        StructureError: If q_0 is not positive definite on the pushed lattice
    """
    lattice = hodge_classes(query.mhs)
    if lattice.rank == 0:
        return []
    basis = lattice.basis_matrix()
    images = query.piece.projection @ basis.T
    gram = images.T @ query.q0 @ images
    classes = []
    for coefficients in short_vectors(gram, query.bound):
        vector = Matrix([coefficients]) @ basis
        norm = (Matrix([coefficients]) @ gram @ Matrix([coefficients]).T)[0, 0].re
        classes.append(HodgeClass(tuple(int(v.re) for v in vector.row(0)), norm))
    return sorted(classes, key=lambda c: c.vector)


@dataclass
class LocusIndicator:
    present: bool
    witness: Optional[HodgeClass] = None

    def to_dict(self) -> Dict[str, Any]:
        return {'present': self.present, 'witness': self.witness.to_dict() if self.witness else None}


def _preferred(classes: Sequence[HodgeClass]) -> HodgeClass:
    def key(c: HodgeClass):
        leading = next(v for v in c.vector if v)
        return c.norm, leading < 0, c.vector

    return min(classes, key=key)


def hdg_locus_indicator(spec: PeriodDomainSpec, hodge: DecreasingFiltration, bound: Any) -> LocusIndicator:
    """
    Whether F lies on the locus of nonzero Hodge classes of norm at most d.

    The witness has the smallest norm, its first nonzero entry positive.

    Raises:
        StructureError: If F is not a point of the mixed period domain
    """
    report = membership(spec, hodge)
    if not report.in_M:
        raise StructureError(f"Filtration is not in the period domain: {'; '.join(report.failures)}")
    classes = enumerate_hdg0_d(HodgeClassQuery(spec.structure(hodge), bound))
    if not classes:
        return LocusIndicator(False)
    return LocusIndicator(True, _preferred(classes))
