"""
Limit Module

Assembly of the limit mixed Hodge structure (V, M(N, W), F0) of a nilpotent
orbit exp(zN) F0.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from mhskit.errors import NoRelativeWeightFiltrationError, StructureError
from mhskit.hodge.structure import MixedHodgeStructure, ValidationReport, hodge_numbers, validate_mhs
from mhskit.linalg.filtration import DecreasingFiltration, IncreasingFiltration
from mhskit.monodromy.nilpotent import NilpotentOperator
from mhskit.monodromy.weight_filtration import RelativeWeightFiltration, relative_weight_filtration

logger = logging.getLogger(__name__)


@dataclass
class LimitResult:
    relative: RelativeWeightFiltration
    report: ValidationReport
    mhs: Optional[MixedHodgeStructure] = None

    @property
    def valid(self) -> bool:
        return self.mhs is not None

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'valid': self.valid,
            'relative_weight_filtration': self.relative.to_dict(),
            'report': self.report.to_dict(),
        }
        if self.mhs is not None:
            result['hodge_numbers'] = hodge_numbers(self.mhs).to_dict()
        return result


def limit_mhs(hodge: DecreasingFiltration, operator: NilpotentOperator,
              weight: IncreasingFiltration, thorough: bool = False) -> LimitResult:
    """
    Validate (V, M(N, W), F0).

    A failing validation is returned in the result, not raised.

    Raises:
        NoRelativeWeightFiltrationError: If M(N, W) does not exist
        StructureError: If the dimensions disagree
    """
    if hodge.ambient_dim != operator.dim:
        raise StructureError(f"Hodge filtration of dimension {hodge.ambient_dim} for an operator "
                             f"of dimension {operator.dim}")
    relative = relative_weight_filtration(operator, weight)
    if not relative.exists:
        raise NoRelativeWeightFiltrationError(f"M(N, W) does not exist: {relative.reason}")
    report = validate_mhs(operator.dim, relative.filtration, hodge, thorough=thorough)
    if not report.valid:
        logger.debug("limit filtration fails validation: %s", report.failures)
        return LimitResult(relative, report)
    return LimitResult(relative, report, MixedHodgeStructure(operator.dim, relative.filtration, hodge))
