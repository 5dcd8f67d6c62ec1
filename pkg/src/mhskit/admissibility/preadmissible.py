"""
Preadmissible Module

The one-variable pre-admissibility verdict of a local model:

  cond1: the relative weight filtration M(N, W) exists;
  cond2: every graded piece Gr_F^p Gr_k^W of the extended Hodge bundle is
         locally free, i.e. its rank at q = 0 equals its generic rank.

Ranks of polynomial matrices are computed exactly. The generic rank is the
largest rank over enough distinct integer sample points: a nonzero minor of
size r has degree at most r * deg(Psi), so it cannot vanish at all of
r * deg(Psi) + 1 points.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from mhskit.admissibility.local_model import LocalModel1D
from mhskit.linalg.filtration import DecreasingFiltration
from mhskit.linalg.matrix import Matrix
from mhskit.monodromy.nilpotent import NilpotentOperator
from mhskit.monodromy.weight_filtration import RelativeWeightFiltration, relative_weight_filtration

logger = logging.getLogger(__name__)


@dataclass
class PreadmissibilityVerdict:
    cond1: bool
    cond2: bool
    relative: RelativeWeightFiltration
    graded_ranks: Dict[Tuple[int, int], Tuple[int, int]] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def preadmissible(self) -> bool:
        return self.cond1 and self.cond2

    def to_dict(self) -> Dict[str, Any]:
        return {
            'cond1': self.cond1,
            'cond2': self.cond2,
            'preadmissible': self.preadmissible,
            'details': {
                'failures': self.failures,
                'graded_ranks': {f"{p},{k}": {'generic': g, 'at_zero': z}
                                 for (p, k), (g, z) in sorted(self.graded_ranks.items())},
                'relative_weight_filtration': self.relative.to_dict(),
            },
        }


def _stacked(model: LocalModel1D, p: int, q: Any, extra: Matrix) -> Matrix:
    return Matrix.vstack([model.generator_matrix(p, q), extra])


def _generic_rank(model: LocalModel1D, p: int, extra: Matrix) -> int:
    size = min(len(model.psi[p]) + extra.rows, model.rank)
    samples = size * max(model.degree, 0) + 1
    best = 0
    for point in range(1, samples + 1):
        best = max(best, _stacked(model, p, point, extra).rank())
        if best == size:
            break
    return best


def _graded_rank_at(model: LocalModel1D, p: int, k: int, q: Any) -> int:
    """dim Gr_k^W F^p(q) = dim W_k - dim W_{k-1} - rank(F^p + W_k) + rank(F^p + W_{k-1})."""
    upper, lower = model.weight[k], model.weight[k - 1]
    return (upper.dim - lower.dim - _stacked(model, p, q, upper.basis).rank()
            + _stacked(model, p, q, lower.basis).rank())


def _graded_rank_generic(model: LocalModel1D, p: int, k: int) -> int:
    upper, lower = model.weight[k], model.weight[k - 1]
    return (upper.dim - lower.dim - _generic_rank(model, p, upper.basis)
            + _generic_rank(model, p, lower.basis))


def check_preadmissible(model: LocalModel1D) -> PreadmissibilityVerdict:
    """Decide conditions (1) and (2) for a one-variable local model."""
    relative = relative_weight_filtration(model.nilpotent, model.weight)
    failures: List[str] = []
    if not relative.exists:
        failures.append(f"cond1: {relative.reason}")
    # F^p(0) must be a filtration for the graded ranks at zero to make sense
    model.psi_at(0)
    graded_ranks: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for p in model.psi:
        for k in model.weight.indices:
            generic = _graded_rank_generic(model, p, k)
            at_zero = _graded_rank_at(model, p, k, 0)
            graded_ranks[(p, k)] = (generic, at_zero)
            if generic != at_zero:
                failures.append(f"cond2: Gr_F^{p} Gr_{k}^W has generic rank {generic} but rank {at_zero} at q = 0")
    cond2 = all(g == z for g, z in graded_ranks.values())
    verdict = PreadmissibilityVerdict(relative.exists, cond2, relative, graded_ranks, failures)
    logger.debug("preadmissibility: cond1=%s cond2=%s", verdict.cond1, verdict.cond2)
    return verdict


def check_orbit_transversality(hodge: DecreasingFiltration, operator: NilpotentOperator) -> bool:
    """N F^p <= F^{p-1} for every p."""
    return hodge.is_preserved_by(operator.matrix, shift=-1)
