"""
Descriptors Module

Fundamental-set descriptors and the group actions they are verified against.
Every region is open and semialgebraic with rational data, so membership of a
rational point is decided exactly; the closures are decided the same way.

Descriptors:
  StripDescriptor     {offset < x - slope * y < offset + width, y > floor} in C
  HalfPlaneDomain     the classical SL2(Z) domain thickened by epsilon
  BoxDescriptor       an open box in the S(W)(R) chart
  ProductDescriptor   a graded-part domain times a chart box

Actions:
  TranslationAction   z -> z + n * period
  Sl2Action           SL2(Z) by fractional linear maps
  LatticeAction       v -> v + n * basis on the chart
  ProductAction       a graded-part action times a lattice action
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from mhskit.errors import StructureError
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import GaussianRational, format_scalar, to_fraction


@dataclass(frozen=True)
class StripDescriptor:
    """
    A strip with recession direction (dx, dy), dy > 0, cut horizontally at width.

    With floor set the ambient space is {Im z > floor}; otherwise it is C.
    """
    direction: Tuple[Fraction, Fraction]
    offset: Fraction
    width: Fraction
    floor: Optional[Fraction] = None
    kind = "strip"

    def __post_init__(self):
        dx, dy = (to_fraction(v) for v in self.direction)
        if dy <= 0:
            raise StructureError(f"Strip direction must point upwards, got ({dx}, {dy})")
        object.__setattr__(self, "direction", (dx, dy))
        object.__setattr__(self, "offset", to_fraction(self.offset))
        object.__setattr__(self, "width", to_fraction(self.width))
        if self.floor is not None:
            object.__setattr__(self, "floor", to_fraction(self.floor))
        if self.width <= 0:
            raise StructureError(f"Strip width must be positive, got {self.width}")

    @classmethod
    def vertical(cls, offset: Any, width: Any, floor: Any = None) -> "StripDescriptor":
        return cls((Fraction(0), Fraction(1)), offset, width, floor)

    @property
    def slope(self) -> Fraction:
        """dx / dy: 0 for a vertical strip."""
        return self.direction[0] / self.direction[1]

    def section(self, point: Any) -> Fraction:
        """The horizontal coordinate x - slope * y that the width is measured in."""
        point = GaussianRational.of(point)
        return point.re - self.slope * point.im

    def contains(self, point: Any) -> bool:
        point = GaussianRational.of(point)
        s = self.section(point)
        return self.offset < s < self.offset + self.width and (self.floor is None or point.im > self.floor)

    def closure_contains(self, point: Any) -> bool:
        point = GaussianRational.of(point)
        s = self.section(point)
        return self.offset <= s <= self.offset + self.width and (self.floor is None or point.im >= self.floor)

    def to_dict(self) -> dict:
        result = {'kind': self.kind, 'direction': [format_scalar(v) for v in self.direction],
                  'offset': format_scalar(self.offset), 'width': format_scalar(self.width)}
        if self.floor is not None:
            result['floor'] = format_scalar(self.floor)
        return result


@dataclass(frozen=True)
class HalfPlaneDomain:
    """{|Re tau| < 1/2 + epsilon, |tau| > 1 - epsilon} in the upper half-plane, 0 < epsilon < 1/4."""
    epsilon: Fraction
    kind = "half-plane"

    def __post_init__(self):
        object.__setattr__(self, "epsilon", to_fraction(self.epsilon))
        if not 0 <= self.epsilon < Fraction(1, 4):
            raise StructureError(f"Thickening must lie in [0, 1/4), got {self.epsilon}")

    @property
    def half_width(self) -> Fraction:
        return Fraction(1, 2) + self.epsilon

    @property
    def radius(self) -> Fraction:
        return 1 - self.epsilon

    @property
    def min_height_squared(self) -> Fraction:
        """Im tau squared at the lowest corners of the closure."""
        return self.radius ** 2 - self.half_width ** 2

    def contains(self, tau: Any) -> bool:
        tau = GaussianRational.of(tau)
        return tau.im > 0 and abs(tau.re) < self.half_width and tau.norm() > self.radius ** 2

    def closure_contains(self, tau: Any) -> bool:
        tau = GaussianRational.of(tau)
        return tau.im > 0 and abs(tau.re) <= self.half_width and tau.norm() >= self.radius ** 2

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'epsilon': format_scalar(self.epsilon)}


@dataclass(frozen=True)
class BoxDescriptor:
    """The open box prod (lo_i, hi_i) in chart coordinates."""
    bounds: Tuple[Tuple[Fraction, Fraction], ...]
    kind = "box"

    def __post_init__(self):
        bounds = tuple((to_fraction(lo), to_fraction(hi)) for lo, hi in self.bounds)
        if not bounds:
            raise StructureError("A box needs at least one coordinate")
        for i, (lo, hi) in enumerate(bounds):
            if not lo < hi:
                raise StructureError(f"Box side {i} is empty: ({lo}, {hi})")
        object.__setattr__(self, "bounds", bounds)

    @property
    def dim(self) -> int:
        return len(self.bounds)

    @property
    def sides(self) -> List[Fraction]:
        return [hi - lo for lo, hi in self.bounds]

    def contains(self, point: Sequence[Any]) -> bool:
        return len(point) == self.dim and all(lo < to_fraction(x) < hi for (lo, hi), x in zip(self.bounds, point))

    def closure_contains(self, point: Sequence[Any]) -> bool:
        return len(point) == self.dim and all(lo <= to_fraction(x) <= hi for (lo, hi), x in zip(self.bounds, point))

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'bounds': [[format_scalar(lo), format_scalar(hi)] for lo, hi in self.bounds]}


@dataclass(frozen=True)
class ProductDescriptor:
    """A domain for the graded part (None when the graded point is fixed) times a chart box."""
    box: BoxDescriptor
    graded: Optional[HalfPlaneDomain] = None
    kind = "product"

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'box': self.box.to_dict(),
                'graded': self.graded.to_dict() if self.graded is not None else None}


@dataclass(frozen=True)
class TranslationAction:
    period: Fraction
    kind = "translation"

    def __post_init__(self):
        object.__setattr__(self, "period", to_fraction(self.period))
        if self.period <= 0:
            raise StructureError(f"Translation period must be positive, got {self.period}")

    def apply(self, n: int, point: Any) -> GaussianRational:
        return GaussianRational.of(point) + self.period * n


@dataclass(frozen=True)
class Sl2Action:
    kind = "sl2"


@dataclass(frozen=True)
class LatticeAction:
    """Translations by the integer combinations of the rows of a rational basis."""
    basis: Matrix
    kind = "lattice"

    def __post_init__(self):
        basis = self.basis if isinstance(self.basis, Matrix) else Matrix(self.basis)
        if not basis.is_square() or not basis.is_real() or basis.rank() < basis.rows:
            raise StructureError("Lattice basis must be a nondegenerate square rational matrix")
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def is_diagonal(self) -> bool:
        return all(self.basis[i, j] == 0 for i in range(self.dim) for j in range(self.dim) if i != j)

    def translate(self, n: Sequence[int]) -> List[Fraction]:
        return [x.re for x in (Matrix([list(n)]) @ self.basis).row(0)]

    def apply(self, n: Sequence[int], point: Sequence[Any]) -> List[Fraction]:
        return [to_fraction(x) + t for x, t in zip(point, self.translate(n))]


@dataclass(frozen=True)
class ProductAction:
    lattice: LatticeAction
    graded: Optional[Sl2Action] = None
    kind = "product"
