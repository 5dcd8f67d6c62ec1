"""
Mixed Hodge structures: validation, Deligne bigrading, Weil operators,
graded polarizations, constructions, morphisms and integral Hodge classes.
"""

from mhskit.hodge.bigrading import Bigrading, check_bigrading, deligne_bigrading, is_split_over_R
from mhskit.hodge.constructions import (
    direct_sum, dual, elliptic, hodge_tate, hom, kummer, tensor, tensor_to_hom_permutation, twist,
)
from mhskit.hodge.hodge_classes import hodge_classes
from mhskit.hodge.morphism import MhsMorphism, MorphismReport, check_morphism, strictness_check
from mhskit.hodge.polarization import (
    PolarizationReport, check_graded_polarization, hodge_decomposition, weil_matrix, weil_operator,
)
from mhskit.hodge.structure import (
    GradedPolarization, HodgeNumbers, MixedHodgeStructure, ValidationReport, hodge_numbers, validate_mhs,
)

__all__ = [
    "Bigrading", "check_bigrading", "deligne_bigrading", "is_split_over_R",
    "direct_sum", "dual", "elliptic", "hodge_tate", "hom", "kummer", "tensor",
    "tensor_to_hom_permutation", "twist", "hodge_classes", "MhsMorphism", "MorphismReport",
    "check_morphism", "strictness_check", "PolarizationReport", "check_graded_polarization",
    "hodge_decomposition", "weil_matrix", "weil_operator", "GradedPolarization", "HodgeNumbers",
    "MixedHodgeStructure", "ValidationReport", "hodge_numbers", "validate_mhs",
]
