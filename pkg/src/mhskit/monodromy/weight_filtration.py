"""
Weight Filtration Module

Monodromy weight filtrations: the pure filtration of a nilpotent operator and
the filtration M(N, W) relative to an increasing filtration W.

The relative filtration is built bottom-up over the weights of W. Over each
Gr_b^W the induced operator forces the graded data (the pure filtration
centered at b); each Jordan chain of the induced operator is then lifted to V
by solving a linear system that puts N^(l+1) of the lifted top into the part
of M already built. No solution means M(N, W) does not exist. Every candidate
is checked against the axioms before it is returned.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from mhskit.errors import StructureError
from mhskit.linalg.filtration import IncreasingFiltration
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import GaussianRational
from mhskit.linalg.subspace import Subspace
from mhskit.monodromy.nilpotent import NilpotentOperator, jordan_chains

logger = logging.getLogger(__name__)


def weight_filtration_pure(operator: NilpotentOperator, center: int) -> IncreasingFiltration:
    """
    M_{center+k} = sum_{j >= max(0, -k)} N^j ker N^(k+2j+1).

    The unique filtration with N M_k <= M_{k-2} and N^l : Gr_{center+l} = Gr_{center-l}.
    """
    n = operator.dim
    m = max(operator.nilpotency_index, 1)
    steps: Dict[int, Subspace] = {}
    for k in range(-m, m + 1):
        space = Subspace.zero(n)
        j = max(0, -k)
        while j < m and k + 2 * j + 1 >= 0:
            space = space.sum(operator.kernel(k + 2 * j + 1).apply(operator.power(j)))
            j += 1
        steps[center + k] = space
    return IncreasingFiltration(n, steps)


@dataclass
class RelativeWeightFiltration:
    """
    The result of relative_weight_filtration: M itself when it exists, the
    forced graded filtrations on each Gr_b^W, and the failing step otherwise.
    """
    exists: bool
    filtration: Optional[IncreasingFiltration] = None
    graded: Dict[int, IncreasingFiltration] = field(default_factory=dict)
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {'exists': self.exists}
        if self.filtration is not None:
            result['filtration'] = {str(k): s.basis.to_strings() for k, s in self.filtration}
        if self.reason:
            result['reason'] = self.reason
        return result


def _span_up_to(vectors: List[Tuple[List[GaussianRational], int]], k: int, n: int) -> Subspace:
    return Subspace(n, [v for v, w in vectors if w <= k])


def relative_weight_filtration(operator: NilpotentOperator,
                               weight: IncreasingFiltration) -> RelativeWeightFiltration:
    """
    Construct M(N, W) when it exists.

    Raises:
        StructureError: If N does not preserve W
    """
    n = operator.dim
    if weight.ambient_dim != n:
        raise StructureError(f"Filtration of dimension {weight.ambient_dim} for an operator of dimension {n}")
    if not operator.preserves(weight):
        raise StructureError("N does not preserve W")
    N = operator.matrix
    weighted: List[Tuple[List[GaussianRational], int]] = []
    graded: Dict[int, IncreasingFiltration] = {}
    for b, piece in weight.graded_pieces().items():
        induced = NilpotentOperator(piece.induce_operator(N))
        graded[b] = weight_filtration_pure(induced, b)
        below = weight[b - 1]
        below_columns = below.column_basis()
        for top, length in jordan_chains(induced.matrix):
            l = length - 1
            v0 = piece.lift @ Matrix.column_vector(top)
            power = N ** (l + 1)
            target = _span_up_to(weighted, b - l - 2, n)
            quotient = target.quotient_map()
            if below.dim:
                correction = (quotient @ power @ below_columns).solve(-(quotient @ power @ v0))
                if correction is None:
                    reason = (f"no lift of a length-{length} chain of Gr_{b}: N^{l + 1} of its top "
                              f"cannot be moved into M_{b - l - 2}")
                    logger.debug("relative weight filtration: %s", reason)
                    return RelativeWeightFiltration(exists=False, graded=graded, reason=reason)
                v0 = v0 + below_columns @ correction
            elif not (quotient @ power @ v0).is_zero():
                reason = f"N^{l + 1} of a length-{length} chain top of Gr_{b} is not zero"
                return RelativeWeightFiltration(exists=False, graded=graded, reason=reason)
            vector = v0
            for j in range(length):
                weighted.append((vector.column(0), b + l - 2 * j))
                vector = N @ vector
    levels = sorted({w for _, w in weighted})
    candidate = IncreasingFiltration(n, {k: _span_up_to(weighted, k, n) for k in levels})
    failures = verify_relative_axioms(operator, weight, candidate)
    if failures:
        logger.debug("relative weight filtration candidate failed: %s", failures)
        return RelativeWeightFiltration(exists=False, graded=graded, reason=failures[0])
    return RelativeWeightFiltration(exists=True, filtration=candidate, graded=graded)


def verify_relative_axioms(operator: NilpotentOperator, weight: IncreasingFiltration,
                           candidate: IncreasingFiltration) -> List[str]:
    """
    Failures of the axioms N M_k <= M_{k-2} and N^l : Gr^M_{b+l} Gr^W_b = Gr^M_{b-l} Gr^W_b.

    The isomorphism is checked as equal dimensions plus surjectivity.
    """
    failures: List[str] = []
    N = operator.matrix
    lo, hi = candidate.lowest(), candidate.highest()
    for k in range(lo, hi + 1):
        if not candidate[k].apply(N) <= candidate[k - 2]:
            failures.append(f"N M_{k} is not contained in M_{k - 2}")
    for b, piece in weight.graded_pieces().items():
        induced_m = piece.induce_increasing(candidate)
        induced_n = piece.induce_operator(N)
        for l in range(1, max(hi - b, b - lo) + 1):
            upper, upper_below = induced_m[b + l], induced_m[b + l - 1]
            lower, lower_below = induced_m[b - l], induced_m[b - l - 1]
            if upper.dim - upper_below.dim != lower.dim - lower_below.dim:
                failures.append(f"Gr^M_{b + l} and Gr^M_{b - l} of Gr^W_{b} differ in dimension")
                continue
            image = upper.apply(induced_n ** l).sum(lower_below)
            if not lower <= image:
                failures.append(f"N^{l} is not onto Gr^M_{b - l} Gr^W_{b}")
    return failures


def graded_dimensions_from_jordan(sizes: List[int], center: int) -> Dict[int, int]:
    """dim Gr^M_k predicted by Jordan block sizes: a block of size s has weights center+s-1, ..., center-s+1."""
    dims: Dict[int, int] = {}
    for size in sizes:
        for j in range(size):
            k = center + size - 1 - 2 * j
            dims[k] = dims.get(k, 0) + 1
    return dims
