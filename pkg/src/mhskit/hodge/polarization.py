"""
Polarization Module

Weil operators of pure Hodge structures and the check of graded polarizations.

Convention: the Hermitian form is h(u, v) = q(Cu, conj v), where C acts by
i^(p-q) on V^{p,q}. With matrices acting on columns its Gram matrix on a real
basis is C^T q, so q = (1) polarizes Q(1) (C = 1 on type (-1,-1)) and
q = [[0, 1], [-1, 0]] polarizes F^1 = <e0 + i e1>.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from mhskit.errors import InvariantViolation, StructureError
from mhskit.hodge.structure import GradedPolarization, MixedHodgeStructure
from mhskit.linalg.filtration import DecreasingFiltration
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import I
from mhskit.linalg.subspace import Subspace

logger = logging.getLogger(__name__)


def hodge_decomposition(hodge: DecreasingFiltration, weight: int) -> Dict[tuple, Subspace]:
    """V^{p,q} = F^p n conj F^q, p + q = weight, for a pure Hodge structure."""
    conjugate = hodge.conjugate()
    pieces = {}
    for p in range(hodge.lowest(), hodge.highest() + 1):
        piece = hodge[p].intersect(conjugate[weight - p])
        if not piece.is_zero():
            pieces[(p, weight - p)] = piece
    return pieces


def weil_matrix(hodge: DecreasingFiltration, weight: int) -> Matrix:
    """The Weil operator of the pure structure (hodge, weight) in the ambient coordinates."""
    pieces = hodge_decomposition(hodge, weight)
    n = hodge.ambient_dim
    if sum(piece.dim for piece in pieces.values()) != n:
        raise StructureError(f"Filtration is not a pure Hodge structure of weight {weight}")
    if n == 0:
        return Matrix.zeros(0, 0)
    basis = Matrix.hstack([piece.column_basis() for piece in pieces.values()])
    values = []
    for (p, q), piece in pieces.items():
        values.extend([I ** ((p - q) % 4)] * piece.dim)
    weil = basis @ Matrix.diag(values) @ basis.inverse()
    if not weil.is_real():
        raise InvariantViolation("Weil operator of a Hodge structure came out non-real")
    return weil


def weil_operator(mhs: MixedHodgeStructure) -> Matrix:
    """
    The real matrix C acting by i^(p-q) on V^{p,q}; C^2 = (-1)^weight.

    Raises:
        NotPureError: If mhs has more than one weight
    """
    return weil_matrix(mhs.hodge, mhs.pure_weight())


@dataclass
class PolarizationReport:
    polarized: bool
    failures: Dict[int, List[str]] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {'polarized': self.polarized,
                'failures': {str(k): v for k, v in sorted(self.failures.items())}}


def _check_piece(k: int, form: Matrix, hodge: DecreasingFiltration) -> List[str]:
    reasons = []
    n = hodge.ambient_dim
    if form.shape != (n, n):
        return [f"q_{k} has shape {form.shape}, Gr_{k} has dimension {n}"]
    sign = 1 if k % 2 == 0 else -1
    if form.T != form * sign:
        reasons.append(f"q_{k} is not {'symmetric' if sign == 1 else 'antisymmetric'}")
    if form.det() == 0:
        reasons.append(f"q_{k} is degenerate")
        return reasons
    for p in range(hodge.lowest(), hodge.highest() + 1):
        left, right = hodge[p], hodge[k - p + 1]
        if left.dim and right.dim and not (left.basis @ form @ right.basis.T).is_zero():
            reasons.append(f"F^{p} and F^{k - p + 1} are not q_{k}-orthogonal")
    weil = weil_matrix(hodge, k)
    hermitian = weil.T @ form
    if hermitian.H != hermitian:
        reasons.append(f"h on Gr_{k} is not Hermitian")
        return reasons
    minors = hermitian.leading_minors()
    if any(not m.is_real() or m.re <= 0 for m in minors):
        reasons.append(f"h on Gr_{k} is not positive definite")
    pieces = list(hodge_decomposition(hodge, k).values())
    for i, a in enumerate(pieces):
        for b in pieces[i + 1:]:
            if not (a.basis @ hermitian @ b.basis.conjugate().T).is_zero():
                reasons.append(f"Hodge decomposition of Gr_{k} is not h-orthogonal")
    return reasons


def check_graded_polarization(mhs: MixedHodgeStructure,
                              polarization: Optional[GradedPolarization] = None) -> PolarizationReport:
    """
    Check q_k on every nonzero Gr_k: (-1)^k-symmetry, nondegeneracy, first
    bilinear relation q(F^p, F^{k-p+1}) = 0, and positivity of h by leading
    principal minors together with h-orthogonality of the Hodge decomposition.
    """
    polarization = polarization or mhs.polarizations
    failures: Dict[int, List[str]] = {}
    for k in mhs.weights:
        if polarization is None or k not in polarization:
            failures[k] = [f"no polarization for Gr_{k}"]
            continue
        reasons = _check_piece(k, polarization[k], mhs.graded_hodge(k))
        if reasons:
            failures[k] = reasons
    if failures:
        logger.debug("graded polarization failures: %s", failures)
    return PolarizationReport(polarized=not failures, failures=failures)
