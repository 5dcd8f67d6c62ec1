"""
Fundamental Sets Module

Verification of fundamental sets (covering and finite self-overlap), the
definable-structure comparison of strips, finite-index refinement and the
pull-back of chart boxes along the delta retraction of the Kummer domain.

Covering is decided exactly for translation strips, diagonal lattices and the
thickened SL2 domain; a general lattice box is checked on a sample of the
fundamental parallelepiped and reported as "sampled". Overlap sets are exact:
an SL2 element overlaps when the domain meets its preimage, decided in the
coordinates (Re tau, |tau|^2) where both are cut out by linear inequalities.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple


from mhskit.domains.descriptors import (
    BoxDescriptor, HalfPlaneDomain, LatticeAction, ProductAction, ProductDescriptor, Sl2Action, StripDescriptor,
    TranslationAction,
)
from mhskit.domains.reduction import IntMatrix, act, negate
from mhskit.errors import InvariantViolation, StructureError, UnsupportedKindError
from mhskit.hodge.constructions import kummer
from mhskit.linalg.scalars import GaussianRational, format_scalar
from mhskit.settings import get_options
from mhskit.splittings.grading import SplittingChart
from mhskit.splittings.retraction import delta_retract

logger = logging.getLogger(__name__)


def jsonable_element(element: Any) -> Any:
    return [jsonable_element(part) for part in element] if isinstance(element, tuple) else element


@dataclass
class FundamentalSetReport:
    covering: bool
    covering_status: str
    overlaps: List[Any]
    overlap_status: str
    witnesses: Dict[Any, Any] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.covering

    def to_dict(self) -> Dict[str, Any]:
        return {
            'valid': self.valid,
            'covering': self.covering,
            'covering_status': self.covering_status,
            'overlaps': [jsonable_element(g) for g in self.overlaps],
            'overlap_status': self.overlap_status,
            'failures': self.failures,
        }


def _verify_strip(strip: StripDescriptor, action: TranslationAction) -> FundamentalSetReport:
    # horizontal translates of the section interval: covering iff width > period
    period, width = action.period, strip.width
    covering = width > period
    bound = math.floor(width / period) + 1
    overlaps = [n for n in range(-bound, bound + 1) if abs(n) * period < width]
    failures = [] if covering else [f"width {width} does not exceed period {period}"]
    return FundamentalSetReport(covering, "exact", overlaps, "exact", failures=failures)


def _integer_ranges(bounds: Sequence[Tuple[Fraction, Fraction]], inverse: List[List[Fraction]],
                    shift: Sequence[Fraction]) -> List[range]:
    """Ranges for n with (y - shift) B^{-1} = n for some y in the closed box."""
    ranges = []
    for j in range(len(bounds)):
        low = sum(min((lo - s) * inverse[i][j], (hi - s) * inverse[i][j])
                  for i, ((lo, hi), s) in enumerate(zip(bounds, shift)))
        high = sum(max((lo - s) * inverse[i][j], (hi - s) * inverse[i][j])
                   for i, ((lo, hi), s) in enumerate(zip(bounds, shift)))
        ranges.append(range(math.floor(low), math.ceil(high) + 1))
    return ranges


def _verify_box(box: BoxDescriptor, action: LatticeAction, sample_budget: int) -> FundamentalSetReport:
    if box.dim != action.dim:
        raise StructureError(f"Box of dimension {box.dim} for a lattice of rank {action.dim}")
    inverse = [[x.re for x in row] for row in action.basis.inverse().row_list()]
    sides = box.sides

    centered = [(-s, s) for s in sides]
    overlaps = []
    for n in itertools.product(*_integer_ranges(centered, inverse, [Fraction(0)] * box.dim)):
        if all(abs(t) < s for t, s in zip(action.translate(n), sides)):
            overlaps.append(tuple(n))

    failures = []
    if action.is_diagonal():
        status = "exact"
        for i in range(box.dim):
            period = abs(action.basis[i, i].re)
            if not sides[i] > period:
                failures.append(f"side {i} of length {sides[i]} does not exceed period {period}")
    else:
        status = "sampled"
        per_axis = max(2, int(sample_budget ** (1 / box.dim)))
        ticks = [Fraction(2 * k + 1, 2 * per_axis) for k in range(per_axis)]
        for t in itertools.product(ticks, repeat=box.dim):
            point = action.translate(t)
            hits = (n for n in itertools.product(*_integer_ranges(box.bounds, inverse, point))
                    if box.contains([x + y for x, y in zip(point, action.translate(n))]))
            if next(hits, None) is None:
                failures.append(f"no translate of the box contains {[format_scalar(x) for x in point]}")
                break
    return FundamentalSetReport(not failures, status, sorted(overlaps), "exact", failures=failures)


def _sqrt_ceiling(value: Fraction) -> int:
    """An integer at least sqrt(value) for value >= 0."""
    return math.isqrt(math.ceil(value)) + 1


def _sl2_candidates(first: HalfPlaneDomain, second: HalfPlaneDomain) -> List[IntMatrix]:
    """
    Elements allowed by the height bound, one of each pair +-gamma.

    A point of a domain has Im tau > h0 with h0^2 its lowest corner height. If tau is
    in the first domain and gamma tau in the second then c^2 < 1 / (h0 h0'),
    |d| < |c| (1/2 + eps) + 1 / (|c| h0') and |a| < |c| (1/2 + eps') + 1 / (|c| h0).
    """
    low, high = first.min_height_squared, second.min_height_squared
    candidates = [((1, b), (0, 1)) for b in range(-2, 3) if abs(b) < first.half_width + second.half_width]
    c = 1
    while c ** 4 * low * high < 1:
        a_limit = math.floor(c * second.half_width) + _sqrt_ceiling(1 / (c * c * low)) + 1
        d_limit = math.floor(c * first.half_width) + _sqrt_ceiling(1 / (c * c * high)) + 1
        for a in range(-a_limit, a_limit + 1):
            for d in range(-d_limit, d_limit + 1):
                if (a * d - 1) % c == 0:
                    candidates.append(((a, (a * d - 1) // c), (c, d)))
        c += 1
    return candidates


# alpha s + beta x + delta > 0 in the coordinates (x, s = |tau|^2)
Constraint = Tuple[Fraction, Fraction, Fraction]
Point = Tuple[Fraction, Fraction]


def _domain_constraints(first: HalfPlaneDomain, second: HalfPlaneDomain, gamma: IntMatrix) -> List[Constraint]:
    """The conditions tau in the first domain and gamma tau in the second, all linear in (x, s)."""
    (a, b), (c, d) = gamma
    h, r_sq = second.half_width, second.radius ** 2
    one, zero = Fraction(1), Fraction(0)
    return [
        (one, zero, -first.radius ** 2),
        (zero, -one, first.half_width),
        (zero, one, first.half_width),
        # h |c tau + d|^2 -+ Re((a tau + b)(c conj(tau) + d)) > 0
        (h * c * c - a * c, 2 * h * c * d - (a * d + b * c), h * d * d - b * d),
        (h * c * c + a * c, 2 * h * c * d + (a * d + b * c), h * d * d + b * d),
        # |a tau + b|^2 > r^2 |c tau + d|^2
        (a * a - r_sq * c * c, 2 * a * b - 2 * r_sq * c * d, b * b - r_sq * d * d),
    ]


def _clip(polygon: List[Point], constraint: Constraint) -> List[Point]:
    """Sutherland-Hodgman clip of a convex polygon to alpha s + beta x + delta >= 0."""
    alpha, beta, delta = constraint

    def value(point: Point) -> Fraction:
        return alpha * point[1] + beta * point[0] + delta

    clipped: List[Point] = []
    for current, following in zip(polygon, polygon[1:] + polygon[:1]):
        u, v = value(current), value(following)
        if u >= 0:
            clipped.append(current)
        if (u > 0 > v) or (u < 0 < v):
            t = u / (u - v)
            clipped.append((current[0] + t * (following[0] - current[0]),
                            current[1] + t * (following[1] - current[1])))
    return clipped


def _area2(polygon: List[Point]) -> Fraction:
    return sum((p[0] * q[1] - q[0] * p[1] for p, q in zip(polygon, polygon[1:] + polygon[:1])), Fraction(0))


def _lowest_excess(polygon: List[Point]) -> Tuple[Fraction, Point]:
    """The minimum of x^2 - s over a convex polygon and a point attaining it."""
    best: Optional[Tuple[Fraction, Point]] = None
    for (x1, s1), (x2, s2) in zip(polygon, polygon[1:] + polygon[:1]):
        points = [(x1, s1)]
        dx, ds = x2 - x1, s2 - s1
        if dx:
            t = (ds - 2 * x1 * dx) / (2 * dx * dx)
            if 0 < t < 1:
                points.append((x1 + t * dx, s1 + t * ds))
        for x, s in points:
            excess = x * x - s
            if best is None or excess < best[0]:
                best = (excess, (x, s))
    return best


def _rational_point(x: Fraction, s: Fraction, bits: int) -> GaussianRational:
    """x + i y with y a dyadic lower approximation of sqrt(s - x^2)."""
    scale = 1 << bits
    return GaussianRational(x, Fraction(math.isqrt(math.floor((s - x * x) * scale * scale)), scale))


def sl2_overlap_witness(first: HalfPlaneDomain, gamma: IntMatrix, second: Optional[HalfPlaneDomain] = None,
                        max_bits: int = 1024) -> Optional[GaussianRational]:
    """
    A rational tau in the first domain with gamma tau in the second, or None when there is none.

    The second domain defaults to the first. Every condition is linear in
    (x, s = x^2 + y^2), so the candidates form an open polygon P in that plane
    and a point exists iff x^2 - s < 0 somewhere on the closure of P. The
    polygon is clipped exactly from a box that the height bound guarantees to
    contain every solution.

    Raises:
        InvariantViolation: If no rational point is found although the overlap is nonempty
    """
    second = second or first
    (a, b), (c, d) = gamma
    if c == 0:
        # translation by b / d with d = +-1: both domains contain every high enough point over an interval
        shift = b * d
        lo, hi = max(-first.half_width, -second.half_width - shift), min(first.half_width, second.half_width - shift)
        return GaussianRational((lo + hi) / 2, 2 + abs(shift)) if lo < hi else None
    top = first.half_width ** 2 + 1 / (c ** 4 * second.min_height_squared)
    h = first.half_width
    polygon: List[Point] = [(-h, Fraction(0)), (h, Fraction(0)), (h, top), (-h, top)]
    for constraint in _domain_constraints(first, second, gamma):
        if not constraint[0] and not constraint[1]:
            if constraint[2] <= 0:
                return None
            continue
        polygon = _clip(polygon, constraint)
        if len(polygon) < 3:
            return None
    if _area2(polygon) == 0:
        return None
    excess, lowest = _lowest_excess(polygon)
    if excess >= 0:
        return None
    center = (sum(p[0] for p in polygon) / len(polygon), sum(p[1] for p in polygon) / len(polygon))
    step = Fraction(1, 2)
    while True:
        x = lowest[0] + step * (center[0] - lowest[0])
        s = lowest[1] + step * (center[1] - lowest[1])
        if x * x < s:
            break
        step /= 2
    bits = 8
    while bits <= max_bits:
        tau = _rational_point(x, s, bits)
        if tau.im > 0 and first.contains(tau) and second.contains(act(gamma, tau)):
            return tau
        bits *= 2
    raise InvariantViolation(f"no rational point found in the overlap of the domain with its {gamma} translate")


def sl2_meeting_elements(first: HalfPlaneDomain, second: HalfPlaneDomain) -> Dict[IntMatrix, GaussianRational]:
    """Every gamma with gamma tau in the second domain for some tau in the first, with a witness tau."""
    meeting = {}
    for gamma in _sl2_candidates(first, second):
        witness = sl2_overlap_witness(first, gamma, second)
        if witness is not None:
            logger.debug("%s meets at %s", gamma, witness)
            for g in (gamma, negate(gamma)):
                meeting[g] = witness
    return meeting


def _verify_half_plane(domain: HalfPlaneDomain) -> FundamentalSetReport:
    # the translates of the closed standard domain cover H, so the domain covers iff it contains that closure
    covering = domain.half_width > Fraction(1, 2) and domain.radius < 1
    witnesses = sl2_meeting_elements(domain, domain)
    failures = [] if covering else ["the boundary point i of the standard domain lies in no translate"]
    return FundamentalSetReport(covering, "exact", sorted(witnesses), "exact", witnesses, failures)


def verify_fundamental_set(descriptor: Any, action: Any, sample_budget: Optional[int] = None,
                           **options: Any) -> FundamentalSetReport:
    """
    Check that the translates of the descriptor cover the space and list the self-overlaps.

    Supported pairs: strip with translation, half-plane domain with SL2(Z),
    box with lattice, and products of a half-plane domain (or nothing) with a box.

    Raises:
        UnsupportedKindError: For any other descriptor and action pair
    """
    settings = get_options(sample_budget=sample_budget, **options)
    if isinstance(descriptor, StripDescriptor) and isinstance(action, TranslationAction):
        return _verify_strip(descriptor, action)
    if isinstance(descriptor, HalfPlaneDomain) and isinstance(action, Sl2Action):
        return _verify_half_plane(descriptor)
    if isinstance(descriptor, BoxDescriptor) and isinstance(action, LatticeAction):
        return _verify_box(descriptor, action, settings['sample_budget'])
    if isinstance(descriptor, ProductDescriptor) and isinstance(action, ProductAction):
        box = _verify_box(descriptor.box, action.lattice, settings['sample_budget'])
        if (descriptor.graded is None) != (action.graded is None):
            raise UnsupportedKindError("Graded part of the descriptor and of the action disagree")
        if descriptor.graded is None:
            return box
        graded = _verify_half_plane(descriptor.graded)
        return FundamentalSetReport(
            graded.covering and box.covering,
            "exact" if box.covering_status == "exact" else "sampled",
            [(g, n) for g in graded.overlaps for n in box.overlaps],
            graded.overlap_status,
            failures=graded.failures + box.failures,
        )
    raise UnsupportedKindError(f"No verification for a {getattr(descriptor, 'kind', type(descriptor).__name__)} "
                               f"under a {getattr(action, 'kind', type(action).__name__)} action")


@dataclass
class StructureComparison:
    same: bool
    forward: List[Any] = field(default_factory=list)
    backward: List[Any] = field(default_factory=list)
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            'same': self.same,
            'forward': [jsonable_element(g) for g in self.forward],
            'backward': [jsonable_element(g) for g in self.backward],
            'reason': self.reason,
        }


def covering_translates(inner: StripDescriptor, outer: StripDescriptor, action: TranslationAction) -> List[int]:
    """
    The fewest consecutive n with inner inside the union of outer + n * period.

    Both strips must share a slope and outer must be a fundamental set, so that
    consecutive translates of outer overlap.
    """
    if inner.slope != outer.slope:
        raise StructureError("Strips of different slopes are not covered by finitely many translates")
    period = action.period
    first = math.floor((inner.offset - outer.offset) / period)
    last = math.ceil((inner.offset + inner.width - outer.offset - outer.width) / period)
    return list(range(first, max(first, last) + 1))


def lattice_meetings(first: BoxDescriptor, second: BoxDescriptor, action: LatticeAction) -> List[Tuple[int, ...]]:
    """Every n with first meeting second + n; finite for bounded boxes."""
    if first.dim != action.dim or second.dim != action.dim:
        raise StructureError(f"Boxes of dimensions {first.dim}, {second.dim} for a lattice of rank {action.dim}")
    inverse = [[x.re for x in row] for row in action.basis.inverse().row_list()]
    gaps = [(lo1 - hi2, hi1 - lo2) for (lo1, hi1), (lo2, hi2) in zip(first.bounds, second.bounds)]
    return sorted(tuple(n) for n in itertools.product(*_integer_ranges(gaps, inverse, [Fraction(0)] * first.dim))
                  if all(lo < t < hi for (lo, hi), t in zip(gaps, action.translate(n))))


def _finitely_many(forward: List[Any], backward: List[Any]) -> str:
    return f"each lies in finitely many translates of the other ({len(forward)} and {len(backward)})"


def compare_structures(first: Any, second: Any, action: Any) -> StructureComparison:
    """
    Decide whether two fundamental sets induce the same definable structure on the quotient.

    forward lists the translates of the second set that meet the first, so that
    the first lies in their union; backward is the same with the roles swapped.
    Strips of one slope, thickened SL2 domains, lattice boxes and their
    products always give finite lists; strips of different slopes never do.

    Raises:
        StructureError: If either descriptor is not a fundamental set for the action
        UnsupportedKindError: For descriptor kinds without a decision procedure
    """
    for descriptor in (first, second):
        report = verify_fundamental_set(descriptor, action)
        if not report.valid:
            raise StructureError(f"{descriptor.to_dict()} is not a fundamental set: {'; '.join(report.failures)}")
    if isinstance(first, StripDescriptor) and isinstance(second, StripDescriptor):
        if first.slope != second.slope:
            return StructureComparison(False, reason=f"slopes {format_scalar(first.slope)} and "
                                                     f"{format_scalar(second.slope)} differ")
        return StructureComparison(True, covering_translates(first, second, action),
                                   covering_translates(second, first, action), "equal slopes")
    if isinstance(first, HalfPlaneDomain) and isinstance(second, HalfPlaneDomain):
        forward, backward = sorted(sl2_meeting_elements(second, first)), sorted(sl2_meeting_elements(first, second))
        return StructureComparison(True, forward, backward, _finitely_many(forward, backward))
    if isinstance(first, BoxDescriptor) and isinstance(second, BoxDescriptor):
        forward, backward = lattice_meetings(first, second, action), lattice_meetings(second, first, action)
        return StructureComparison(True, forward, backward, _finitely_many(forward, backward))
    if isinstance(first, ProductDescriptor) and isinstance(second, ProductDescriptor):
        if (first.graded is None) != (second.graded is None):
            raise UnsupportedKindError("Products with and without a graded part")
        forward = lattice_meetings(first.box, second.box, action.lattice)
        backward = lattice_meetings(second.box, first.box, action.lattice)
        if first.graded is not None:
            forward = [(g, n) for g in sorted(sl2_meeting_elements(second.graded, first.graded)) for n in forward]
            backward = [(g, n) for g in sorted(sl2_meeting_elements(first.graded, second.graded)) for n in backward]
        return StructureComparison(True, forward, backward, _finitely_many(forward, backward))
    raise UnsupportedKindError(f"Cannot compare a {first.kind} with a {second.kind}")


def same_definable_structure(first: Any, second: Any, action: Any) -> bool:
    return compare_structures(first, second, action).same


def refine_for_subgroup(strip: StripDescriptor, action: TranslationAction,
                        index: int) -> Tuple[StripDescriptor, TranslationAction]:
    """
    The union of the translates by 0, ..., index - 1 as a strip for the subgroup index * Z.

    Raises:
        StructureError: If index < 1 or the strip is not a fundamental set
    """
    if index < 1:
        raise StructureError(f"Subgroup index must be positive, got {index}")
    if not strip.width > action.period:
        raise StructureError("Only fundamental strips have strips as unions of translates")
    refined = StripDescriptor(strip.direction, strip.offset, strip.width + (index - 1) * action.period, strip.floor)
    return refined, TranslationAction(index * action.period)


def pullback_strip(box: BoxDescriptor, samples: Sequence[Any] = ()) -> StripDescriptor:
    """
    The preimage of a chart interval under the delta retraction of the Kummer domain.

    The retraction sends K(z) to the chart coordinate Re z, so the preimage of
    (lo, hi) is the vertical strip lo < Re z < hi. Sample points are pushed
    through the retraction and must land where the strip says they do.

    Raises:
        StructureError: If the box is not one-dimensional
        InvariantViolation: If a sample's chart coordinate disagrees with Re z
    """
    if box.dim != 1:
        raise StructureError(f"The Kummer chart is one-dimensional, got a box of dimension {box.dim}")
    (lo, hi), = box.bounds
    strip = StripDescriptor.vertical(lo, hi - lo)
    for z in samples:
        z = GaussianRational.of(z)
        mhs = kummer(z)
        coordinate, = SplittingChart(mhs.weight).coordinates(delta_retract(mhs).grading)
        if coordinate != z.re or box.contains([coordinate.re]) != strip.contains(z):
            raise InvariantViolation(f"retraction of K({z}) has chart coordinate {coordinate}")
    return strip
