"""
Mixed period domains, fundamental sets and their quotients: membership, the
M_R product coordinates, reduction to fundamental domains, overlap sets and the
definable-structure comparison of fundamental sets.
"""

from mhskit.domains.descriptors import (
    BoxDescriptor, HalfPlaneDomain, LatticeAction, ProductAction, ProductDescriptor, Sl2Action, StripDescriptor,
    TranslationAction,
)
from mhskit.domains.fundamental_sets import (
    FundamentalSetReport, StructureComparison, compare_structures, covering_translates, pullback_strip,
    refine_for_subgroup, same_definable_structure, verify_fundamental_set,
)
from mhskit.domains.period_domain import MembershipReport, PeriodDomainSpec, membership, real_split_coordinates
from mhskit.domains.quotient import Identification, identify_in_quotient
from mhskit.domains.reduction import (
    IDENTITY, INVERSION, act, compose, in_standard_domain, inverse, is_sl2, negate, reduce_sl2, reduce_unipotent,
    translation,
)

__all__ = [
    "BoxDescriptor", "HalfPlaneDomain", "LatticeAction", "ProductAction", "ProductDescriptor", "Sl2Action",
    "StripDescriptor", "TranslationAction", "FundamentalSetReport", "StructureComparison",
    "compare_structures", "covering_translates", "pullback_strip", "refine_for_subgroup",
    "same_definable_structure", "verify_fundamental_set", "MembershipReport", "PeriodDomainSpec",
    "membership", "real_split_coordinates", "Identification", "identify_in_quotient", "IDENTITY",
    "INVERSION", "act", "compose", "in_standard_domain", "inverse", "is_sl2", "negate", "reduce_sl2",
    "reduce_unipotent", "translation",
]
