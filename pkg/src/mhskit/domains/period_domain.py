"""
Period Domain Module

Membership in the compact dual, the mixed period domain M and its real-split
locus M_R, and the product coordinates of M_R (graded point, real grading).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List

from mhskit.errors import StructureError
from mhskit.hodge.bigrading import is_split_over_R
from mhskit.hodge.polarization import check_graded_polarization
from mhskit.hodge.structure import (
    GradedPolarization, HodgeNumbers, MixedHodgeStructure, hodge_numbers, validate_mhs,
)
from mhskit.linalg.filtration import DecreasingFiltration, IncreasingFiltration
from mhskit.splittings.retraction import RealSplitPoint, split_point

logger = logging.getLogger(__name__)


class PeriodDomainSpec:
    """
    The data (V_Z, W, h^{p,q}, q_k) fixing a mixed period domain.

    Raises:
        StructureError: If the Hodge numbers of weight k do not add up to dim Gr_k^W
    """

    def __init__(self, rank: int, weight: IncreasingFiltration, hodge_numbers: HodgeNumbers,
                 polarizations: GradedPolarization):
        if weight.ambient_dim != rank:
            raise StructureError(f"Weight filtration of dimension {weight.ambient_dim} for rank {rank}")
        graded = weight.graded_dimensions()
        by_weight = hodge_numbers.weight_dimensions()
        for k in sorted(set(graded) | set(by_weight)):
            if graded.get(k, 0) != by_weight.get(k, 0):
                raise StructureError(f"Hodge numbers of weight {k} add up to {by_weight.get(k, 0)}, "
                                     f"dim Gr_{k}^W is {graded.get(k, 0)}")
        self.rank = rank
        self.weight = weight
        self.hodge_numbers = hodge_numbers
        self.polarizations = polarizations

    def __repr__(self) -> str:
        return f"PeriodDomainSpec(rank={self.rank}, hodge_numbers={self.hodge_numbers})"

    def hodge_ranks(self, k: int) -> Dict[int, int]:
        """f^p = dim F^p Gr_k^W = sum of h^{r, k-r} over r >= p."""
        numbers = {p: h for (p, q), h in self.hodge_numbers.items() if p + q == k}
        if not numbers:
            return {}
        return {p: sum(h for r, h in numbers.items() if r >= p)
                for p in range(min(numbers), max(numbers) + 2)}

    def structure(self, hodge: DecreasingFiltration) -> MixedHodgeStructure:
        return MixedHodgeStructure(self.rank, self.weight, hodge, self.polarizations)


@dataclass
class MembershipReport:
    in_compact_dual: bool
    in_M: bool
    in_M_R: bool
    failures: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {'in_compact_dual': self.in_compact_dual, 'in_M': self.in_M,
                'in_M_R': self.in_M_R, 'failures': self.failures}


def _compact_dual_failures(spec: PeriodDomainSpec, hodge: DecreasingFiltration) -> List[str]:
    failures = []
    for k, piece in spec.weight.graded_pieces().items():
        induced = piece.induce_decreasing(hodge)
        for p, expected in spec.hodge_ranks(k).items():
            if induced[p].dim != expected:
                failures.append(f"dim F^{p} Gr_{k} is {induced[p].dim}, expected {expected}")
        if k not in spec.polarizations:
            failures.append(f"no polarization for Gr_{k}")
            continue
        form = spec.polarizations[k]
        for p in range(induced.lowest(), induced.highest() + 1):
            left, right = induced[p], induced[k - p + 1]
            if left.dim and right.dim and not (left.basis @ form @ right.basis.T).is_zero():
                failures.append(f"F^{p} Gr_{k} and F^{k - p + 1} Gr_{k} are not q_{k}-orthogonal")
    return failures


def membership(spec: PeriodDomainSpec, hodge: DecreasingFiltration) -> MembershipReport:
    """
    Decide F in the compact dual, in M and in M_R.

    Each level adds conditions to the previous one: graded dimensions and
    q-isotropy; then the mixed Hodge axioms, the graded polarization and the
    Hodge numbers; then splitting over R.

    Raises:
        StructureError: If F has the wrong dimension
    """
    if hodge.ambient_dim != spec.rank:
        raise StructureError(f"Hodge filtration of dimension {hodge.ambient_dim} for rank {spec.rank}")
    failures = _compact_dual_failures(spec, hodge)
    in_dual = not failures
    in_m = False
    if in_dual:
        validation = validate_mhs(spec.rank, spec.weight, hodge)
        if not validation.valid:
            failures.extend(f['reason'] for f in validation.failures)
        else:
            mhs = spec.structure(hodge)
            polarization = check_graded_polarization(mhs)
            for k, reasons in sorted(polarization.failures.items()):
                failures.extend(reasons)
            numbers = hodge_numbers(mhs)
            if numbers != spec.hodge_numbers:
                failures.append(f"Hodge numbers {numbers.to_dict()} differ from {spec.hodge_numbers.to_dict()}")
            in_m = polarization.polarized and numbers == spec.hodge_numbers
    in_m_r = in_m and is_split_over_R(spec.structure(hodge))
    if in_m and not in_m_r:
        failures.append("not split over R")
    return MembershipReport(in_dual, in_m, in_m_r, failures)


def real_split_coordinates(spec: PeriodDomainSpec, hodge: DecreasingFiltration) -> RealSplitPoint:
    """
    The (graded point, real grading) pair of a point of M_R.

    Raises:
        StructureError: If F is not in M_R
    """
    report = membership(spec, hodge)
    if not report.in_M_R:
        raise StructureError(f"Filtration is not in M_R: {'; '.join(report.failures)}")
    return split_point(spec.structure(hodge))
