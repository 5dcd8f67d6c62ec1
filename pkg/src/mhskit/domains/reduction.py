"""
Reduction Module

Reduction to fundamental domains: translation lattices in the S(W)(R) chart
(half-open boxes) and the classical SL2(Z) domain in the upper half-plane.
Exact inputs (Fractions, Gaussian rationals) are reduced exactly; floats are
reduced in float arithmetic.
"""

import logging
import math
from fractions import Fraction
from typing import Any, List, Sequence, Tuple, Union

import numpy as np

from mhskit.errors import StructureError
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import GaussianRational, to_fraction

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, int], Tuple[int, int]]
Point = Union[GaussianRational, complex]

IDENTITY: IntMatrix = ((1, 0), (0, 1))
INVERSION: IntMatrix = ((0, -1), (1, 0))

_MAX_STEPS = 10_000


def translation(n: int) -> IntMatrix:
    return ((1, n), (0, 1))


def compose(first: IntMatrix, second: IntMatrix) -> IntMatrix:
    """The matrix product first * second, acting as first after second."""
    (a, b), (c, d) = first
    (e, f), (g, h) = second
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def inverse(gamma: IntMatrix) -> IntMatrix:
    (a, b), (c, d) = gamma
    return ((d, -b), (-c, a))


def negate(gamma: IntMatrix) -> IntMatrix:
    (a, b), (c, d) = gamma
    return ((-a, -b), (-c, -d))


def is_sl2(gamma: IntMatrix) -> bool:
    (a, b), (c, d) = gamma
    return a * d - b * c == 1


def act(gamma: IntMatrix, tau: Point) -> Point:
    """(a tau + b) / (c tau + d)."""
    (a, b), (c, d) = gamma
    return (tau * a + b) / (tau * c + d)


def _real(tau: Point):
    return tau.re if isinstance(tau, GaussianRational) else tau.real


def _imag(tau: Point):
    return tau.im if isinstance(tau, GaussianRational) else tau.imag


def _norm(tau: Point):
    return tau.norm() if isinstance(tau, GaussianRational) else abs(tau) ** 2


def _as_point(tau: Any) -> Point:
    if isinstance(tau, (complex, float)) and not isinstance(tau, bool):
        return complex(tau)
    return GaussianRational.of(tau)


def in_standard_domain(tau: Any) -> bool:
    """|Re tau| <= 1/2 and |tau| >= 1."""
    tau = _as_point(tau)
    return _imag(tau) > 0 and abs(_real(tau)) <= Fraction(1, 2) and _norm(tau) >= 1


def reduce_sl2(tau: Any) -> Tuple[IntMatrix, Point]:
    """
    gamma in SL2(Z) and tau' = gamma tau with |Re tau'| <= 1/2 and |tau'| >= 1.

    Translations bring Re tau into [-1/2, 1/2); the inversion is applied while
    |tau| < 1, and once more on the unit circle when Re tau > 0, so boundary
    points end on Re = -1/2 or on the left half of the arc.

    Raises:
        StructureError: If tau is not in the upper half-plane
    """
    tau = _as_point(tau)
    if _imag(tau) <= 0:
        raise StructureError(f"{tau} is not in the upper half-plane")
    gamma = IDENTITY
    half = Fraction(1, 2) if isinstance(tau, GaussianRational) else 0.5
    for _ in range(_MAX_STEPS):
        n = math.floor(_real(tau) + half)
        if n:
            tau = act(translation(-n), tau)
            gamma = compose(translation(-n), gamma)
        norm = _norm(tau)
        if norm < 1 or (norm == 1 and _real(tau) > 0):
            tau = act(INVERSION, tau)
            gamma = compose(INVERSION, gamma)
            continue
        return gamma, tau
    raise StructureError(f"SL2 reduction of {tau} did not terminate")


def reduce_unipotent(coordinates: Sequence[Any], lattice: Any) -> Tuple[List[int], List[Any]]:
    """
    gamma and reduced with coordinates = reduced + gamma * lattice, reduced in the half-open box.

    The lattice is given by the rows of a square matrix; reduced has lattice
    coordinates in [0, 1). Floats are reduced with numpy, anything else exactly.

    Raises:
        StructureError: If the lattice is degenerate or of the wrong size
    """
    if any(isinstance(c, float) for c in coordinates):
        basis = np.array(lattice, dtype=float).reshape(len(coordinates), -1)
        if basis.shape[0] != basis.shape[1] or np.linalg.matrix_rank(basis) < basis.shape[0]:
            raise StructureError("Translation lattice is degenerate")
        point = np.array(coordinates, dtype=float)
        gamma = np.floor(np.linalg.solve(basis.T, point)).astype(int)
        return [int(g) for g in gamma], [float(x) for x in point - gamma @ basis]
    basis = Matrix(lattice) if not isinstance(lattice, Matrix) else lattice
    if not basis.is_square() or basis.rows != len(coordinates):
        raise StructureError(f"Lattice of shape {basis.shape} for {len(coordinates)} coordinates")
    if not basis.is_real() or basis.rank() < basis.rows:
        raise StructureError("Translation lattice is degenerate")
    point = Matrix([[to_fraction(c) for c in coordinates]])
    weights = point @ basis.inverse()
    gamma = [math.floor(w.re) for w in weights.row(0)]
    reduced = point - Matrix([gamma]) @ basis
    return gamma, [x.re for x in reduced.row(0)]
