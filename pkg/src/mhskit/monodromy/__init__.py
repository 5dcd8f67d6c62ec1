"""
Monodromy logarithms, pure and relative weight filtrations and limit mixed
Hodge structures.
"""

from mhskit.monodromy.limit import LimitResult, limit_mhs
from mhskit.monodromy.nilpotent import NilpotentOperator, jordan_chains
from mhskit.monodromy.weight_filtration import (
    RelativeWeightFiltration, graded_dimensions_from_jordan, relative_weight_filtration,
    verify_relative_axioms, weight_filtration_pure,
)

__all__ = [
    "LimitResult", "limit_mhs", "NilpotentOperator", "jordan_chains", "RelativeWeightFiltration",
    "graded_dimensions_from_jordan", "relative_weight_filtration", "verify_relative_axioms",
    "weight_filtration_pure",
]
