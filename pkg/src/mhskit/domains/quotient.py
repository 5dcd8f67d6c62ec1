"""
Quotient Module

The relation R_F on the closure of a fundamental set: two points are
identified in the quotient when an element of the finite overlap set carries
one to the other. Only the overlap set is searched, so the check is exact and
finite.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence

from mhskit.domains.descriptors import (
    BoxDescriptor, HalfPlaneDomain, LatticeAction, ProductAction, ProductDescriptor, Sl2Action, StripDescriptor,
    TranslationAction,
)
from mhskit.domains.fundamental_sets import jsonable_element, verify_fundamental_set
from mhskit.domains.reduction import act
from mhskit.errors import StructureError, UnsupportedKindError
from mhskit.linalg.scalars import GaussianRational, to_fraction

logger = logging.getLogger(__name__)


@dataclass
class Identification:
    related: bool
    element: Optional[Any] = None

    def to_dict(self) -> Dict[str, Any]:
        return {'related': self.related, 'element': jsonable_element(self.element)}


def _check_closure(descriptor: Any, *points: Any) -> None:
    for point in points:
        if not descriptor.closure_contains(point):
            raise StructureError(f"{point} is outside the closure of the {descriptor.kind}")


def identify_in_quotient(first: Any, second: Any, descriptor: Any, action: Any,
                         overlaps: Optional[Sequence[Any]] = None) -> Identification:
    """
    Whether some element of the overlap set maps the first point to the second.

    Points are Gaussian rationals for strips and half-plane domains and rational
    vectors for boxes. The overlap set is computed when not given.

    Raises:
        StructureError: If a point is outside the closure of the descriptor
        UnsupportedKindError: For descriptor and action pairs without an exact action
    """
    if overlaps is None:
        overlaps = verify_fundamental_set(descriptor, action).overlaps
    if isinstance(descriptor, StripDescriptor) and isinstance(action, TranslationAction):
        first, second = GaussianRational.of(first), GaussianRational.of(second)
        _check_closure(descriptor, first, second)
        matches = (n for n in overlaps if action.apply(n, first) == second)
    elif isinstance(descriptor, HalfPlaneDomain) and isinstance(action, Sl2Action):
        first, second = GaussianRational.of(first), GaussianRational.of(second)
        _check_closure(descriptor, first, second)
        matches = (g for g in overlaps if act(g, first) == second)
    elif isinstance(descriptor, BoxDescriptor) and isinstance(action, LatticeAction):
        first, second = [to_fraction(x) for x in first], [to_fraction(x) for x in second]
        _check_closure(descriptor, first, second)
        matches = (n for n in overlaps if action.apply(n, first) == second)
    elif isinstance(descriptor, ProductDescriptor) and isinstance(action, ProductAction):
        if descriptor.graded is None:
            return identify_in_quotient(first, second, descriptor.box, action.lattice, overlaps)
        (tau1, v1), (tau2, v2) = first, second
        tau1, tau2 = GaussianRational.of(tau1), GaussianRational.of(tau2)
        v1, v2 = [to_fraction(x) for x in v1], [to_fraction(x) for x in v2]
        _check_closure(descriptor.graded, tau1, tau2)
        _check_closure(descriptor.box, v1, v2)
        matches = ((g, n) for g, n in overlaps if act(g, tau1) == tau2 and action.lattice.apply(n, v1) == v2)
    else:
        raise UnsupportedKindError(f"No exact identification for a {getattr(descriptor, 'kind', '?')} "
                                   f"under a {getattr(action, 'kind', '?')} action")
    element = next(matches, None)
    logger.debug("identify %s ~ %s: %s", first, second, element)
    return Identification(element is not None, element)
