"""
Constructions Module

Standard mixed Hodge structures (Tate twists, the Kummer family, elliptic
curves) and the tensor, dual, direct sum and hom constructions.
"""

import logging
from itertools import product
from typing import Any, Dict, List, Optional

from mhskit.hodge.structure import GradedPolarization, MixedHodgeStructure
from mhskit.linalg.filtration import DecreasingFiltration, IncreasingFiltration
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.operators import mapping_constraints
from mhskit.linalg.scalars import GaussianRational
from mhskit.linalg.subspace import Subspace

logger = logging.getLogger(__name__)


def hodge_tate(n: int) -> MixedHodgeStructure:
    """Q(n): rank one, weight -2n, type (-n, -n), polarized by q = (1)."""
    return MixedHodgeStructure(
        1,
        IncreasingFiltration.trivial(1, -2 * n),
        DecreasingFiltration.trivial(1, -n),
        GradedPolarization({-2 * n: Matrix([[1]])}),
    )


def kummer(z: Any) -> MixedHodgeStructure:
    """
    K(z): W_{-2} = <e1>, W_0 = V, F^0 = <e0 + z e1>.

    An extension of Q(0) by Q(1); the graded pieces are polarized by q = (1).
    """
    z = GaussianRational.of(z)
    return MixedHodgeStructure(
        2,
        IncreasingFiltration(2, {-2: [[0, 1]], 0: Subspace.full(2)}),
        DecreasingFiltration(2, {-1: Subspace.full(2), 0: [[1, z]]}),
        GradedPolarization({-2: Matrix([[1]]), 0: Matrix([[1]])}),
    )


def elliptic(tau: Any) -> MixedHodgeStructure:
    """
    H^1 of the elliptic curve with period tau: pure of weight 1, F^1 = <e0 + tau e1>.

    Raises NotMixedHodgeStructureError for real tau. The polarization
    [[0, 1], [-1, 0]] is positive exactly when Im tau > 0.
    """
    tau = GaussianRational.of(tau)
    return MixedHodgeStructure(
        2,
        IncreasingFiltration.trivial(2, 1),
        DecreasingFiltration(2, {0: Subspace.full(2), 1: [[1, tau]]}),
        GradedPolarization({1: Matrix([[0, 1], [-1, 0]])}),
    )


def _embed(space: Subspace, dim: int, offset: int) -> Subspace:
    rows = []
    for v in space.vectors():
        row = [0] * dim
        row[offset:offset + len(v)] = v
        rows.append(row)
    return Subspace(dim, rows)


def direct_sum(first: MixedHodgeStructure, second: MixedHodgeStructure) -> MixedHodgeStructure:
    n, m = first.rank, second.rank
    dim = n + m

    def combine(a: Subspace, b: Subspace) -> Subspace:
        return _embed(a, dim, 0).sum(_embed(b, dim, n))

    weights = set(first.weights) | set(second.weights)
    weight = IncreasingFiltration(dim, {k: combine(first.weight[k], second.weight[k]) for k in weights})
    indices = set(first.hodge.indices) | set(second.hodge.indices)
    hodge = DecreasingFiltration(dim, {p: combine(first.hodge[p], second.hodge[p]) for p in indices})
    polarizations = None
    if first.polarizations is not None and second.polarizations is not None:
        forms = {}
        for k in weights:
            blocks = [pol[k] for pol in (first.polarizations, second.polarizations) if k in pol]
            forms[k] = Matrix.block_diag(blocks)
        polarizations = GradedPolarization(forms)
    return MixedHodgeStructure(dim, weight, hodge, polarizations)


def _tensor_span(a: Subspace, b: Subspace) -> Subspace:
    dim = a.ambient_dim * b.ambient_dim
    rows = [[x * y for x in u for y in v] for u, v in product(a.vectors(), b.vectors())]
    return Subspace(dim, rows)


def tensor(first: MixedHodgeStructure, second: MixedHodgeStructure) -> MixedHodgeStructure:
    """
    V (x) V' on Q^(n n'), with e_i (x) e'_j at index i n' + j.

    W_k = sum W_i (x) W'_{k-i} and F^p = sum F^a (x) F'^{p-a}.
    """
    dim = first.rank * second.rank
    weight_steps: Dict[int, Subspace] = {}
    for i, j in product(first.weights, second.weights):
        step = _tensor_span(first.weight[i], second.weight[j])
        weight_steps[i + j] = weight_steps.get(i + j, Subspace.zero(dim)).sum(step)
    cumulative: Dict[int, Subspace] = {}
    for k in sorted(weight_steps):
        cumulative[k] = Subspace.zero(dim)
        for index, step in weight_steps.items():
            if index <= k:
                cumulative[k] = cumulative[k].sum(step)
    hodge_steps: Dict[int, Subspace] = {}
    for a, b in product(range(first.hodge.lowest(), first.hodge.highest() + 1),
                        range(second.hodge.lowest(), second.hodge.highest() + 1)):
        step = _tensor_span(first.hodge[a], second.hodge[b])
        hodge_steps[a + b] = hodge_steps.get(a + b, Subspace.zero(dim)).sum(step)
    hodge = {p: Subspace.zero(dim) for p in hodge_steps}
    for p in hodge:
        for index, step in hodge_steps.items():
            if index >= p:
                hodge[p] = hodge[p].sum(step)
    return MixedHodgeStructure(dim, IncreasingFiltration(dim, cumulative), DecreasingFiltration(dim, hodge))


def dual(mhs: MixedHodgeStructure) -> MixedHodgeStructure:
    """V^ in the dual basis: W_k = ann W_{-k-1}, F^p = ann F^{1-p}."""
    n = mhs.rank
    lo, hi = mhs.weight.lowest(), mhs.weight.highest()
    weight = {k: mhs.weight[-k - 1].annihilator() for k in range(-hi - 1, -lo + 2)}
    plo, phi = mhs.hodge.lowest(), mhs.hodge.highest()
    hodge = {p: mhs.hodge[1 - p].annihilator() for p in range(1 - phi - 1, 1 - plo + 2)}
    return MixedHodgeStructure(n, IncreasingFiltration(n, weight), DecreasingFiltration(n, hodge))


def hom(source: MixedHodgeStructure, target: MixedHodgeStructure) -> MixedHodgeStructure:
    """
    Hom(V, V') as n' x n matrices vectorized row-major.

    W_k = {f : f W_a <= W'_{a+k}} and F^p = {f : f F^a <= F'^{a+p}}.
    """
    n, m = source.rank, target.rank
    dim = n * m

    def shifting(steps_source, steps_target, indices, shift) -> Subspace:
        constraints: List[List[GaussianRational]] = []
        for a in indices:
            constraints.extend(mapping_constraints(steps_source[a], steps_target[a + shift], m))
        if not constraints:
            return Subspace.full(dim)
        return Subspace(dim, constraints).annihilator()

    w_src, w_tgt = source.weight, target.weight
    w_indices = range(w_src.lowest() - 1, w_src.highest() + 1)
    weight = {k: shifting(w_src, w_tgt, w_indices, k)
              for k in range(w_tgt.lowest() - w_src.highest() - 1, w_tgt.highest() - w_src.lowest() + 1)}
    f_src, f_tgt = source.hodge, target.hodge
    f_indices = range(f_src.lowest(), f_src.highest() + 2)
    hodge = {p: shifting(f_src, f_tgt, f_indices, p)
             for p in range(f_tgt.lowest() - f_src.highest() - 1, f_tgt.highest() - f_src.lowest() + 2)}
    return MixedHodgeStructure(dim, IncreasingFiltration(dim, weight), DecreasingFiltration(dim, hodge))


def tensor_to_hom_permutation(source_rank: int, target_rank: int) -> Matrix:
    """
    The permutation taking dual(V) (x) V' coordinates to hom(V, V') coordinates:
    e_i^ (x) e'_j at index i n' + j is the map e_i -> e'_j at index j n + i.
    """
    n, m = source_rank, target_rank
    permutation = Matrix.zeros(n * m, n * m)
    for i in range(n):
        for j in range(m):
            permutation = permutation.with_entry(j * n + i, i * m + j, 1)
    return permutation


def twist(mhs: MixedHodgeStructure, n: int) -> MixedHodgeStructure:
    """V(n) = V (x) Q(n) in the coordinates of V."""
    polarizations: Optional[GradedPolarization] = None
    if mhs.polarizations is not None:
        polarizations = GradedPolarization({k - 2 * n: f for k, f in mhs.polarizations.forms.items()})
    return MixedHodgeStructure(mhs.rank, mhs.weight.shifted(-2 * n), mhs.hodge.shifted(-n), polarizations)
