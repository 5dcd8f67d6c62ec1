"""
Bigrading Module

Deligne's bigrading I^{p,q} of a mixed Hodge structure and the checks a
bigrading must pass.
"""

import logging
from typing import Any, Dict, List, Mapping, Tuple

from mhskit.errors import InvariantViolation, StructureError
from mhskit.hodge.structure import HodgeNumbers, MixedHodgeStructure
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.subspace import Subspace, sum_all

logger = logging.getLogger(__name__)

Bidegree = Tuple[int, int]


class Bigrading:
    """
    A decomposition V_C = sum of J^{p,q}.

    Pieces are kept in the order (p + q, p); ``basis_matrix`` concatenates
    their canonical bases as columns in that order.
    """

    def __init__(self, ambient_dim: int, pieces: Mapping[Bidegree, Subspace]):
        self.ambient_dim = ambient_dim
        self.pieces: Dict[Bidegree, Subspace] = {
            key: pieces[key] for key in sorted(pieces, key=lambda pq: (pq[0] + pq[1], pq[0]))
            if not pieces[key].is_zero()
        }
        total = sum(piece.dim for piece in self.pieces.values())
        if total != ambient_dim or not sum_all(self.pieces.values(), ambient_dim).is_full():
            raise StructureError(f"Pieces of total dimension {total} do not decompose a space of dimension {ambient_dim}")

    def __getitem__(self, key: Bidegree) -> Subspace:
        return self.pieces.get(key, Subspace.zero(self.ambient_dim))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Bigrading):
            return NotImplemented
        return self.pieces == other.pieces

    def __repr__(self) -> str:
        return f"Bigrading({ {k: v.dim for k, v in self.pieces.items()} })"

    def bidegrees(self) -> List[Bidegree]:
        return list(self.pieces)

    def basis_matrix(self) -> Matrix:
        """Columns: the canonical bases of the pieces, in bidegree order."""
        return Matrix.hstack([piece.column_basis() for piece in self.pieces.values()])

    def blocks(self) -> Dict[Bidegree, Tuple[int, int]]:
        """Column ranges of each piece inside basis_matrix."""
        ranges, start = {}, 0
        for key, piece in self.pieces.items():
            ranges[key] = (start, start + piece.dim)
            start += piece.dim
        return ranges

    def eigenvalue_matrix(self, function) -> Matrix:
        """The operator acting on J^{p,q} by the scalar function(p, q)."""
        values = []
        for (p, q), piece in self.pieces.items():
            values.extend([function(p, q)] * piece.dim)
        basis = self.basis_matrix()
        return basis @ Matrix.diag(values) @ basis.inverse()

    def lower_sum(self, p: int, q: int) -> Subspace:
        """The sum of J^{r,s} with r < p and s < q."""
        return sum_all((s for (r, t), s in self.pieces.items() if r < p and t < q), self.ambient_dim)

    def hodge_numbers(self) -> HodgeNumbers:
        return HodgeNumbers({key: piece.dim for key, piece in self.pieces.items()})

    def is_conjugation_symmetric(self) -> bool:
        """conj J^{p,q} = J^{q,p} on the nose."""
        return all(piece.conjugate() == self[(q, p)] for (p, q), piece in self.pieces.items())

    def to_dict(self) -> Dict[str, List[List[str]]]:
        return {f"{p},{q}": piece.basis.to_strings() for (p, q), piece in self.pieces.items()}


def deligne_bigrading(mhs: MixedHodgeStructure) -> Bigrading:
    """
    I^{p,q} = (F^p n W_{p+q}) n (Fbar^q n W_{p+q} + sum_{j>=0} Fbar^{q-1-j} n W_{p+q-2-j}).

    Raises:
        InvariantViolation: If the pieces fail to decompose V_C (cannot happen for a validated structure)
    """
    n = mhs.rank
    hodge = mhs.hodge
    conjugate = hodge.conjugate()
    weight = mhs.weight
    pmin, pmax = hodge.lowest(), hodge.highest()
    bottom = weight.lowest()
    pieces: Dict[Bidegree, Subspace] = {}
    for l in weight.indices:
        w_l = weight[l]
        for p in range(pmin, pmax + 1):
            q = l - p
            left = hodge[p].intersect(w_l)
            if left.is_zero():
                continue
            right = conjugate[q].intersect(w_l)
            j = 0
            while l - 2 - j >= bottom:
                right = right.sum(conjugate[q - 1 - j].intersect(weight[l - 2 - j]))
                j += 1
            piece = left.intersect(right)
            if not piece.is_zero():
                pieces[(p, q)] = piece
    try:
        bigrading = Bigrading(n, pieces)
    except StructureError as e:
        raise InvariantViolation(f"Deligne bigrading failed to decompose V: {e}")
    logger.debug("deligne bigrading: %s", bigrading)
    return bigrading


def check_bigrading(mhs: MixedHodgeStructure, bigrading: Bigrading) -> List[str]:
    """
    Failures of the bigrading axioms relative to mhs: F^p and W_k recovered as
    sums of pieces, and I^{p,q} = conj I^{q,p} modulo the sum of I^{r,s}, r < p, s < q.
    """
    failures = []
    n = mhs.rank
    hodge, weight = mhs.hodge, mhs.weight
    for p in range(hodge.lowest(), hodge.highest() + 2):
        expected = sum_all((s for (r, _), s in bigrading.pieces.items() if r >= p), n)
        if expected != hodge[p]:
            failures.append(f"F^{p} is not the sum of J^(r,s) with r >= {p}")
    for k in range(weight.lowest() - 1, weight.highest() + 1):
        expected = sum_all((s for (r, t), s in bigrading.pieces.items() if r + t <= k), n)
        if expected != weight[k]:
            failures.append(f"W_{k} is not the sum of J^(r,s) with r + s <= {k}")
    for (p, q), piece in bigrading.pieces.items():
        lower = bigrading.lower_sum(p, q)
        if piece.sum(lower) != bigrading[(q, p)].conjugate().sum(lower):
            failures.append(f"I^({p},{q}) is not conj I^({q},{p}) modulo lower pieces")
    return failures


def is_split_over_R(mhs: MixedHodgeStructure) -> bool:
    return deligne_bigrading(mhs).is_conjugation_symmetric()
