"""
Splittings of mixed Hodge structures: gradings of W, the S(W) chart,
L^{-1,-1}, the delta splitting and the delta and sl2 retractions.
"""

from mhskit.splittings.delta import DeltaOperator, delta_splitting, hodge_components, l_minus1_minus1
from mhskit.splittings.grading import (
    GradingOperator, SplittingChart, grading_from_bigrading, standard_grading, unipotent_transport,
)
from mhskit.splittings.retraction import (
    RETRACTIONS, DeltaRetraction, RealSplitPoint, Retraction, Sl2Retraction, delta_retract,
    get_retraction, graded_point, sl2_correction, sl2_retract, split_point,
)

__all__ = [
    "DeltaOperator", "delta_splitting", "hodge_components", "l_minus1_minus1",
    "GradingOperator", "SplittingChart", "grading_from_bigrading", "standard_grading",
    "unipotent_transport", "RETRACTIONS", "DeltaRetraction", "RealSplitPoint", "Retraction",
    "Sl2Retraction", "delta_retract", "get_retraction", "graded_point", "sl2_correction",
    "sl2_retract", "split_point",
]
