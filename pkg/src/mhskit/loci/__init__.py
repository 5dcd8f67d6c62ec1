"""
Hodge loci: bounded-norm integral Hodge classes and the locus indicator.
"""

from mhskit.loci.enumeration import (
    HodgeClass, HodgeClassQuery, LocusIndicator, completed_square, enumerate_hdg0_d, hdg_locus_indicator,
    short_vectors,
)

__all__ = [
    "HodgeClass", "HodgeClassQuery", "LocusIndicator", "completed_square", "enumerate_hdg0_d",
    "hdg_locus_indicator", "short_vectors",
]
