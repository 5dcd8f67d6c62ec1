"""
Commands Module

One Command per command-line verb. Every command reads its fixtures through
the FixtureImporter, calls exactly one library operation and returns a
JSON-ready report.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from mhskit.admissibility.preadmissible import check_preadmissible
from mhskit.admissibility.strip_probe import VerticalStrip, strip_splitting_probe
from mhskit.cli.command_manager import Command, CommandManager
from mhskit.data import schemas
from mhskit.data.fixture_importer import FixtureImporter
from mhskit.domains.descriptors import BoxDescriptor, ProductDescriptor
from mhskit.domains.fundamental_sets import compare_structures, verify_fundamental_set
from mhskit.domains.period_domain import membership, real_split_coordinates
from mhskit.domains.quotient import identify_in_quotient
from mhskit.domains.reduction import reduce_sl2, reduce_unipotent
from mhskit.errors import InputError, NoRelativeWeightFiltrationError
from mhskit.hodge.bigrading import deligne_bigrading, is_split_over_R
from mhskit.hodge.structure import validate_mhs
from mhskit.linalg.scalars import format_scalar, parse_scalar
from mhskit.loci.enumeration import HodgeClassQuery, enumerate_hdg0_d, hdg_locus_indicator
from mhskit.monodromy.limit import limit_mhs
from mhskit.monodromy.weight_filtration import relative_weight_filtration
from mhskit.settings import get_options
from mhskit.splittings.delta import delta_splitting
from mhskit.splittings.retraction import get_retraction

logger = logging.getLogger(__name__)


@dataclass
class CommandOptions:
    """Flags shared by the verbs; each verb reads the ones it needs."""
    retraction: str = "delta"
    d: Optional[str] = None
    strip: Optional[Tuple[Any, Any, Any]] = None
    grid: Tuple[int, int] = (20, 20)
    thorough: bool = False
    workers: Optional[int] = None
    extra: Dict[str, Any] = field(default_factory=dict)


class FixtureCommand(Command):
    """A verb applied to one or more fixture paths."""

    arity = 1

    def __init__(self, paths: Sequence[str], options: CommandOptions, importer: Optional[FixtureImporter] = None):
        if len(paths) != self.arity:
            raise InputError(f"{self.verb} takes {self.arity} fixture path(s), got {len(paths)}")
        self.paths = list(paths)
        self.options = options
        self.importer = importer or FixtureImporter()

    @property
    def path(self) -> str:
        return self.paths[0]

    def describe(self) -> str:
        return f"{self.verb} {' '.join(self.paths)}"

    def bound(self) -> Fraction:
        if self.options.d is None:
            raise InputError(f"{self.verb} needs --d", "--d")
        value = parse_scalar(self.options.d)
        if not value.is_real():
            raise InputError(f"--d must be rational, got {self.options.d}", "--d")
        return value.re


class ValidateCommand(FixtureCommand):
    verb = "validate"

    def execute(self) -> Dict[str, Any]:
        rank, weight, hodge = self.importer.import_filtrations(self.path)
        return validate_mhs(rank, weight, hodge, thorough=self.options.thorough).to_dict()


class BigradeCommand(FixtureCommand):
    verb = "bigrade"

    def execute(self) -> Dict[str, Any]:
        mhs = self.importer.import_mhs(self.path)
        return {'bigrading': deligne_bigrading(mhs).to_dict(), 'split_over_R': is_split_over_R(mhs)}


class DeltaCommand(FixtureCommand):
    verb = "delta"

    def execute(self) -> Dict[str, Any]:
        return delta_splitting(self.importer.import_mhs(self.path)).to_dict()


class RetractCommand(FixtureCommand):
    verb = "retract"

    def execute(self) -> Dict[str, Any]:
        point = get_retraction(self.options.retraction).retract(self.importer.import_mhs(self.path))
        return {'retraction': self.options.retraction, **point.to_dict()}


class RelativeWeightCommand(FixtureCommand):
    verb = "relwt"

    def execute(self) -> Dict[str, Any]:
        model = self.importer.import_model(self.path)
        return relative_weight_filtration(model.nilpotent, model.weight).to_dict()


class LimitCommand(FixtureCommand):
    verb = "limit"

    def execute(self) -> Dict[str, Any]:
        model = self.importer.import_model(self.path)
        try:
            result = limit_mhs(model.psi_at(0), model.nilpotent, model.weight, thorough=self.options.thorough)
        except NoRelativeWeightFiltrationError as e:
            return {'valid': False, 'reason': str(e)}
        return result.to_dict()


class AdmissibleCommand(FixtureCommand):
    verb = "admissible"

    def execute(self) -> Dict[str, Any]:
        model = self.importer.import_model(self.path)
        report = check_preadmissible(model).to_dict()
        points = self.importer.import_spot_points(self.path)
        if points:
            report['spot_checks'] = [c.to_dict() for c in model.spot_check(points, self.options.thorough)]
        return report


class ProbeCommand(FixtureCommand):
    verb = "probe"

    def execute(self) -> Dict[str, Any]:
        if self.options.strip is None:
            raise InputError("probe needs --strip a,b,c", "--strip")
        model = self.importer.import_model(self.path)
        strip = VerticalStrip(*self.options.strip)
        report = strip_splitting_probe(model, strip, self.options.grid, self.options.retraction,
                                       workers=self.options.workers)
        return report.to_dict(digits=get_options()['significant_digits'])


def _reduction_scalar(value: Any) -> Any:
    return value if isinstance(value, float) else parse_scalar(value).re


class ReduceCommand(FixtureCommand):
    verb = "reduce"

    def execute(self) -> Dict[str, Any]:
        query = self.importer.import_reduction(self.path)
        if isinstance(query, schemas.Sl2PointDocument):
            gamma, point = reduce_sl2(parse_scalar(query.point))
            return {'gamma': [list(row) for row in gamma], 'point': format_scalar(point)}
        coordinates = [_reduction_scalar(c) for c in query.coordinates]
        lattice = [[_reduction_scalar(c) for c in row] for row in query.lattice]
        gamma, reduced = reduce_unipotent(coordinates, lattice)
        return {'gamma': gamma, 'reduced': [x if isinstance(x, float) else format_scalar(x) for x in reduced]}


def parse_point(text: str, descriptor: Any) -> Any:
    """A point in the notation of the descriptor: "tau", "x1,x2" or "tau|x1,x2"."""
    def vector(part: str) -> List[Any]:
        return [parse_scalar(x).re for x in part.split(",")]

    if isinstance(descriptor, ProductDescriptor) and descriptor.graded is not None:
        if "|" not in text:
            raise InputError(f"Product point {text!r} must read 'tau|x1,...'")
        tau, coordinates = text.split("|", 1)
        return parse_scalar(tau), vector(coordinates)
    if isinstance(descriptor, (BoxDescriptor, ProductDescriptor)):
        return vector(text)
    return parse_scalar(text)


class IdentifyCommand(FixtureCommand):
    verb = "identify"

    def execute(self) -> Dict[str, Any]:
        descriptor, action = self.importer.import_descriptor(self.path)
        points = self.options.extra.get('points') or []
        if len(points) != 2:
            raise InputError(f"identify takes two points, got {len(points)}", "points")
        first, second = (parse_point(p, descriptor) for p in points)
        return identify_in_quotient(first, second, descriptor, action).to_dict()


class CompareStructuresCommand(FixtureCommand):
    verb = "compare-structures"
    arity = 2

    def execute(self) -> Dict[str, Any]:
        first, action = self.importer.import_descriptor(self.paths[0])
        second, _ = self.importer.import_descriptor(self.paths[1])
        return compare_structures(first, second, action).to_dict()


class VerifySetCommand(FixtureCommand):
    verb = "verify-set"

    def execute(self) -> Dict[str, Any]:
        descriptor, action = self.importer.import_descriptor(self.path)
        return verify_fundamental_set(descriptor, action).to_dict()


class HodgeClassesCommand(FixtureCommand):
    verb = "hodge"

    def execute(self) -> Dict[str, Any]:
        mhs = self.importer.import_mhs(self.path)
        bound = self.bound()
        classes = enumerate_hdg0_d(HodgeClassQuery(mhs, bound, self.importer.import_q0(self.path)))
        return {'bound': format_scalar(bound), 'count': len(classes), 'classes': [c.to_dict() for c in classes]}


class MembershipCommand(FixtureCommand):
    verb = "membership"

    def execute(self) -> Dict[str, Any]:
        spec, hodge = self.importer.import_domain(self.path)
        report = membership(spec, hodge)
        result = report.to_dict()
        if report.in_M_R:
            result['coordinates'] = real_split_coordinates(spec, hodge).to_dict()
        if report.in_M and self.options.d is not None:
            result['locus'] = hdg_locus_indicator(spec, hodge, self.bound()).to_dict()
        return result


class SchemaCheckCommand(FixtureCommand):
    verb = "schema-check"

    def execute(self) -> Dict[str, Any]:
        return self.importer.check(self.path)


COMMANDS = (
    ValidateCommand, BigradeCommand, DeltaCommand, RetractCommand, RelativeWeightCommand, LimitCommand,
    AdmissibleCommand, ProbeCommand, ReduceCommand, IdentifyCommand, CompareStructuresCommand,
    VerifySetCommand, HodgeClassesCommand, MembershipCommand, SchemaCheckCommand,
)


def default_manager() -> CommandManager:
    manager = CommandManager()
    for command in COMMANDS:
        manager.register(command.verb, command)
    return manager
