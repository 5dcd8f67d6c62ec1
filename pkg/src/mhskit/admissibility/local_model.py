"""
Local Model Module

One-variable degenerations over the punctured disk. A local model stores the
weight filtration, the graded polarizations, the monodromy logarithm N and the
untwisted period map Psi(q), whose Hodge filtration is spanned by vectors of
polynomials in q. The multivalued period map is
z -> exp(zN) Psi(e^{2 pi i z}).

Exact evaluation takes q together with a caller-supplied branch value
z = log(q) / 2 pi i; float evaluation owns the transcendental part.
"""

import cmath
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from mhskit.errors import NotMixedHodgeStructureError, NumericalOverflowError, StructureError
from mhskit.hodge.polarization import PolarizationReport, check_graded_polarization
from mhskit.hodge.structure import GradedPolarization, MixedHodgeStructure, ValidationReport, validate_mhs
from mhskit.linalg.filtration import DecreasingFiltration, IncreasingFiltration
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import ZERO, GaussianRational, format_scalar
from mhskit.linalg.subspace import Subspace
from mhskit.monodromy.nilpotent import NilpotentOperator

logger = logging.getLogger(__name__)


class Polynomial:
    """A polynomial in q with Gaussian-rational coefficients, lowest degree first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Any] = ()):
        values = [GaussianRational.of(c) for c in coefficients]
        while values and values[-1].is_zero():
            values.pop()
        self.coefficients: Tuple[GaussianRational, ...] = tuple(values)

    @classmethod
    def constant(cls, value: Any) -> "Polynomial":
        return cls([value])

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, q: Any) -> GaussianRational:
        q = GaussianRational.of(q)
        result = ZERO
        for c in reversed(self.coefficients):
            result = result * q + c
        return result

    def evaluate_float(self, q: complex) -> complex:
        if not self.coefficients:
            return 0j
        return complex(np.polyval([complex(c) for c in reversed(self.coefficients)], q))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"Polynomial({self.to_strings()})"

    def to_strings(self) -> List[str]:
        return [format_scalar(c) for c in self.coefficients]


PolynomialRows = List[List[Polynomial]]


@dataclass
class SpotCheck:
    q: GaussianRational
    branch: GaussianRational
    validation: ValidationReport
    polarization: Optional[PolarizationReport] = None

    @property
    def ok(self) -> bool:
        return self.validation.valid and (self.polarization is None or self.polarization.polarized)

    def to_dict(self) -> Dict[str, Any]:
        result = {'q': format_scalar(self.q), 'branch': format_scalar(self.branch),
                  'ok': self.ok, 'validation': self.validation.to_dict()}
        if self.polarization is not None:
            result['polarization'] = self.polarization.to_dict()
        return result


class LocalModel1D:
    """
    A variation of mixed Hodge structure over the punctured disk in untwisted form.

    Args:
        rank: Rank of the lattice V_Z = Z^rank
        weight: The rational weight filtration
        nilpotent: The monodromy logarithm; exp(N) must be integral and preserve W
        psi: For each p, generators of F^p(q) as rows of polynomials (not cumulative)
        polarizations: Graded polarizations, optional
    """

    def __init__(self, rank: int, weight: IncreasingFiltration, nilpotent: NilpotentOperator,
                 psi: Mapping[int, PolynomialRows], polarizations: Optional[GradedPolarization] = None):
        if weight.ambient_dim != rank or nilpotent.dim != rank:
            raise StructureError(f"Local model of rank {rank} has filtrations or N of another dimension")
        if not nilpotent.has_integral_exponential():
            raise StructureError("Monodromy exp(N) is not integral")
        if not nilpotent.preserves(weight):
            raise StructureError("N does not preserve W")
        if not psi:
            raise StructureError("Psi has no Hodge steps")
        for p, rows in psi.items():
            for row in rows:
                if len(row) != rank:
                    raise StructureError(f"Psi generator for F^{p} has {len(row)} entries, expected {rank}")
        self.rank = rank
        self.weight = weight
        self.nilpotent = nilpotent
        self.psi: Dict[int, PolynomialRows] = {int(p): [list(r) for r in rows] for p, rows in sorted(psi.items())}
        self.polarizations = polarizations

    def __repr__(self) -> str:
        return f"LocalModel1D(rank={self.rank}, weights={self.weight.indices}, hodge_steps={list(self.psi)})"

    @property
    def degree(self) -> int:
        """The largest degree of an entry of Psi."""
        return max((entry.degree for rows in self.psi.values() for row in rows for entry in row), default=0)

    def generator_matrix(self, p: int, q: Any) -> Matrix:
        """The generators of F^p(q) evaluated at an exact q, as rows."""
        rows = self.psi.get(p, [])
        return Matrix.from_rows([[entry(q) for entry in row] for row in rows], self.rank)

    def psi_at(self, q: Any) -> DecreasingFiltration:
        """
        Psi(q) as an exact filtration.

        Raises:
            StructureError: If the evaluated steps are not nested
        """
        return DecreasingFiltration(self.rank, {p: Subspace(self.rank, self.generator_matrix(p, q))
                                                for p in self.psi})

    def psi_at_float(self, q: complex) -> Dict[int, np.ndarray]:
        return {p: np.array([[entry.evaluate_float(q) for entry in row] for row in rows], dtype=complex)
                .reshape(len(rows), self.rank) for p, rows in self.psi.items()}

    def twist(self, branch: Any) -> Matrix:
        """exp(zN) for an exact z."""
        return (self.nilpotent.matrix * GaussianRational.of(branch)).exp_nilpotent()

    def spot_check(self, points: Sequence[Tuple[Any, Any]], thorough: bool = False) -> List[SpotCheck]:
        """
        Validate the lifted period map at exact sample points (q, branch).

        The polarization is checked when the model carries one.
        """
        results = []
        for q, branch in points:
            hodge = evaluate_period_map(self, q, branch)
            validation = validate_mhs(self.rank, self.weight, hodge, thorough=thorough)
            polarization = None
            if validation.valid and self.polarizations is not None:
                mhs = MixedHodgeStructure(self.rank, self.weight, hodge, self.polarizations)
                polarization = check_graded_polarization(mhs)
            results.append(SpotCheck(GaussianRational.of(q), GaussianRational.of(branch), validation, polarization))
        return results


def _check_branch(q: GaussianRational, branch: GaussianRational) -> None:
    if q.is_zero():
        raise StructureError("The period map is not defined at q = 0")
    # |q| < 1 exactly when Im z > 0
    if (q.norm() < 1) != (branch.im > 0):
        raise StructureError(f"Branch value {branch} is inconsistent with |q|^2 = {q.norm()}")


def evaluate_period_map(model: LocalModel1D, q: Any, branch: Any, winding: int = 0) -> DecreasingFiltration:
    """
    exp((z + w) N) Psi(q) for an exact q, a branch value z of log(q)/2 pi i and a winding w.

    Raises:
        StructureError: If q = 0 or the branch is inconsistent with q
    """
    q, branch = GaussianRational.of(q), GaussianRational.of(branch)
    _check_branch(q, branch)
    return model.psi_at(q).apply(model.twist(branch + winding))


def untwist(model: LocalModel1D, hodge: DecreasingFiltration, branch: Any, winding: int = 0) -> DecreasingFiltration:
    """exp(-(z + w) N) F, the inverse of the twist in evaluate_period_map."""
    return hodge.apply(model.twist(-(GaussianRational.of(branch) + winding)))


def _exp_nilpotent_float(matrix: np.ndarray) -> np.ndarray:
    n = matrix.shape[0]
    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        term = term @ matrix / k
        result = result + term
    return result


def evaluate_period_map_float(model: LocalModel1D, z: complex) -> Dict[int, np.ndarray]:
    """
    Float evaluation of exp(zN) Psi(e^{2 pi i z}): for each p, generator rows of F^p.

    Raises:
        NumericalOverflowError: If q underflows or the twisted generators are not finite
    """
    if z.imag <= 0:
        raise StructureError(f"z = {z} is not in the upper half-plane")
    q = cmath.exp(2j * cmath.pi * z)
    if q == 0:
        raise NumericalOverflowError(f"q = exp(2 pi i z) underflows at z = {z}")
    twist = _exp_nilpotent_float(model.nilpotent.matrix.to_complex() * z)
    values = {}
    with np.errstate(over="ignore", invalid="ignore"):
        for p, rows in model.psi_at_float(q).items():
            values[p] = rows @ twist.T
            if not np.all(np.isfinite(values[p])):
                raise NumericalOverflowError(f"F^{p} at z = {z} is not finite")
    return values


def exact_filtration(rank: int, generators: Mapping[int, np.ndarray]) -> DecreasingFiltration:
    """The exact filtration spanned by float generator rows, each float read as its exact dyadic value."""
    steps = {}
    for p, rows in generators.items():
        steps[p] = Subspace(rank, [[GaussianRational.of(complex(x)) for x in row] for row in rows])
    return DecreasingFiltration(rank, steps)


def lifted_structure(model: LocalModel1D, z: complex) -> MixedHodgeStructure:
    """
    The mixed Hodge structure at z, from float evaluation made exact.

    Raises:
        NotMixedHodgeStructureError: If the rounded filtration is not a mixed Hodge structure
    """
    hodge = exact_filtration(model.rank, evaluate_period_map_float(model, z))
    try:
        return MixedHodgeStructure(model.rank, model.weight, hodge, model.polarizations)
    except NotMixedHodgeStructureError:
        logger.debug("lifted filtration at z = %s is not a mixed Hodge structure", z)
        raise
