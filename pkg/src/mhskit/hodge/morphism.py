"""
Morphism Module

Morphisms of mixed Hodge structures: filtration preservation and strictness.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List

from mhskit.errors import StructureError
from mhskit.hodge.structure import MixedHodgeStructure
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.subspace import Subspace


@dataclass
class MhsMorphism:
    """A rational matrix (target.rank x source.rank) between two structures."""
    source: MixedHodgeStructure
    target: MixedHodgeStructure
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.rank, self.source.rank):
            raise StructureError(
                f"Morphism matrix has shape {self.matrix.shape}, expected {(self.target.rank, self.source.rank)}")
        if not self.matrix.is_real():
            raise StructureError("Morphism matrix must be rational")


@dataclass
class MorphismReport:
    ok: bool
    failures: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {'ok': self.ok, 'failures': self.failures}


def _weight_range(f: MhsMorphism) -> range:
    lo = min(f.source.weight.lowest(), f.target.weight.lowest())
    hi = max(f.source.weight.highest(), f.target.weight.highest())
    return range(lo, hi + 1)


def _hodge_range(f: MhsMorphism) -> range:
    lo = min(f.source.hodge.lowest(), f.target.hodge.lowest())
    hi = max(f.source.hodge.highest(), f.target.hodge.highest())
    return range(lo, hi + 1)


def check_morphism(f: MhsMorphism) -> MorphismReport:
    """f(W_k) <= W'_k and f(F^p) <= F'^p for every k and p."""
    failures = []
    for k in _weight_range(f):
        if not f.source.weight[k].apply(f.matrix) <= f.target.weight[k]:
            failures.append(f"f(W_{k}) is not contained in W'_{k}")
    for p in _hodge_range(f):
        if not f.source.hodge[p].apply(f.matrix) <= f.target.hodge[p]:
            failures.append(f"f(F^{p}) is not contained in F'^{p}")
    return MorphismReport(ok=not failures, failures=failures)


def strictness_check(f: MhsMorphism) -> MorphismReport:
    """f(V) n W'_k = f(W_k) and f(V_C) n F'^p = f(F^p) for every k and p."""
    failures = []
    image = Subspace.full(f.source.rank).apply(f.matrix)
    for k in _weight_range(f):
        if image.intersect(f.target.weight[k]) != f.source.weight[k].apply(f.matrix):
            failures.append(f"f is not strict for W_{k}")
    for p in _hodge_range(f):
        if image.intersect(f.target.hodge[p]) != f.source.hodge[p].apply(f.matrix):
            failures.append(f"f is not strict for F^{p}")
    return MorphismReport(ok=not failures, failures=failures)
