"""
One-variable local models, pre-admissibility and the vertical strip probe.
"""

from mhskit.admissibility.grid_runner import GridRunner, run_rows
from mhskit.admissibility.local_model import (
    LocalModel1D, Polynomial, SpotCheck, evaluate_period_map, evaluate_period_map_float, exact_filtration,
    lifted_structure, untwist,
)
from mhskit.admissibility.preadmissible import (
    PreadmissibilityVerdict, check_orbit_transversality, check_preadmissible,
)
from mhskit.admissibility.strip_probe import (
    ProbeReport, ProbeRow, VerticalStrip, divergence_flag, strip_splitting_probe,
)

__all__ = [
    "GridRunner", "run_rows", "LocalModel1D", "Polynomial", "SpotCheck", "evaluate_period_map",
    "evaluate_period_map_float", "exact_filtration", "lifted_structure", "untwist",
    "PreadmissibilityVerdict", "check_orbit_transversality", "check_preadmissible", "ProbeReport",
    "ProbeRow", "VerticalStrip", "divergence_flag", "strip_splitting_probe",
]
