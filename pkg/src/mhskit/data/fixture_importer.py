"""
Fixture Importer Module

This module turns JSON documents that passed the schemas into domain objects:
mixed Hodge structures, period domain data, local models, fundamental-set
descriptors with their actions, and reduction queries.
"""

import json
import logging
from typing import Any, Dict, List, Tuple, Union

from mhskit.admissibility.local_model import LocalModel1D, Polynomial
from mhskit.data import schemas
from mhskit.domains.descriptors import (
    BoxDescriptor, HalfPlaneDomain, LatticeAction, ProductAction, ProductDescriptor, Sl2Action, StripDescriptor,
    TranslationAction,
)
from mhskit.domains.period_domain import PeriodDomainSpec
from mhskit.errors import InputError
from mhskit.hodge.structure import GradedPolarization, HodgeNumbers, MixedHodgeStructure
from mhskit.linalg.filtration import DecreasingFiltration, IncreasingFiltration, filtration_from_rows
from mhskit.linalg.matrix import Matrix
from mhskit.linalg.scalars import parse_scalar
from mhskit.monodromy.nilpotent import NilpotentOperator

logger = logging.getLogger(__name__)


class FixtureImporter:
    """
    Handles importing fixture documents with various options.
    """

    def __init__(self):
        """Initialize the fixture importer."""
        self.default_options = {
            'encoding': 'utf-8',
            'validate': True,
        }

    def load(self, file_path: str, **options) -> Dict[str, Any]:
        """
        Read a JSON document.

        Raises:
            InputError: If the file cannot be read or is not JSON
        """
        opts = {**self.default_options, **options}
        try:
            with open(file_path, encoding=opts['encoding']) as handle:
                return json.load(handle)
        except OSError as e:
            raise InputError(f"Cannot read fixture: {e}", file_path)
        except json.JSONDecodeError as e:
            raise InputError(f"Not valid JSON: {e}", file_path)

    def check(self, file_path: str, **options) -> Dict[str, Any]:
        """Schema-check a file without building anything."""
        return {'path': file_path, **schemas.schema_check(self.load(file_path, **options))}

    # structures

    def weight(self, document: schemas.FilteredDocument) -> IncreasingFiltration:
        return filtration_from_rows("weight", document.rank, document.weight)

    def polarizations(self, document: schemas.FilteredDocument) -> GradedPolarization:
        return GradedPolarization({int(k): Matrix(rows) for k, rows in document.polarizations.items()})

    def hodge(self, document: schemas.MhsDocument) -> DecreasingFiltration:
        return filtration_from_rows("hodge", document.rank, document.hodge)

    def mhs_from_data(self, data: Dict[str, Any]) -> MixedHodgeStructure:
        document = schemas.parse_mhs(data)
        return MixedHodgeStructure(document.rank, self.weight(document), self.hodge(document),
                                   self.polarizations(document))

    def import_mhs(self, file_path: str, **options) -> MixedHodgeStructure:
        return self.mhs_from_data(self.load(file_path, **options))

    def import_filtrations(self, file_path: str, **options) -> Tuple[int, IncreasingFiltration, DecreasingFiltration]:
        """(rank, W, F) without requiring the mixed Hodge axioms, for validation reports."""
        document = schemas.parse_mhs(self.load(file_path, **options))
        return document.rank, self.weight(document), self.hodge(document)

    def import_q0(self, file_path: str, **options) -> Union[Matrix, None]:
        document = schemas.parse_mhs(self.load(file_path, **options))
        return Matrix(document.q0) if document.q0 is not None else None

    def import_domain(self, file_path: str, **options) -> Tuple[PeriodDomainSpec, DecreasingFiltration]:
        """
        Period domain data and a point F of its compact dual candidates.

        Raises:
            InputError: If the document carries no hodge_numbers
        """
        document = schemas.parse_mhs(self.load(file_path, **options))
        if document.hodge_numbers is None:
            raise InputError("membership needs hodge_numbers", "hodge_numbers")
        numbers = HodgeNumbers({tuple(int(x) for x in key.split(",")): h
                                for key, h in document.hodge_numbers.items()})
        spec = PeriodDomainSpec(document.rank, self.weight(document), numbers, self.polarizations(document))
        return spec, self.hodge(document)

    # local models

    def model_from_data(self, data: Dict[str, Any]) -> LocalModel1D:
        document = schemas.parse_model1d(data)
        psi = {int(p): [[Polynomial(entry) for entry in row] for row in rows] for p, rows in document.psi.items()}
        return LocalModel1D(document.rank, self.weight(document), NilpotentOperator(document.nilpotent), psi,
                            self.polarizations(document))

    def import_model(self, file_path: str, **options) -> LocalModel1D:
        return self.model_from_data(self.load(file_path, **options))

    def import_spot_points(self, file_path: str, **options) -> List[Tuple[Any, Any]]:
        document = schemas.parse_model1d(self.load(file_path, **options))
        return [(parse_scalar(q), parse_scalar(z)) for q, z in document.spot_points]

    # fundamental sets

    def descriptor_from_data(self, data: Dict[str, Any]) -> Tuple[Any, Any]:
        """(descriptor, action) from a descriptor document."""
        document = schemas.parse_descriptor(data)
        if isinstance(document, schemas.StripDocument):
            strip = StripDescriptor(tuple(parse_scalar(v).re for v in document.direction),
                                    parse_scalar(document.offset).re, parse_scalar(document.width).re,
                                    parse_scalar(document.floor).re if document.floor is not None else None)
            return strip, TranslationAction(parse_scalar(document.period).re)
        if isinstance(document, schemas.HalfPlaneDocument):
            return HalfPlaneDomain(parse_scalar(document.epsilon).re), Sl2Action()
        box = BoxDescriptor(tuple((parse_scalar(lo).re, parse_scalar(hi).re) for lo, hi in document.bounds))
        lattice = LatticeAction(Matrix(document.lattice))
        if isinstance(document, schemas.BoxDocument):
            return box, lattice
        graded = HalfPlaneDomain(parse_scalar(document.graded.epsilon).re) if document.graded else None
        return ProductDescriptor(box, graded), ProductAction(lattice, Sl2Action() if graded else None)

    def import_descriptor(self, file_path: str, **options) -> Tuple[Any, Any]:
        return self.descriptor_from_data(self.load(file_path, **options))

    def reduction_from_data(self, data: Dict[str, Any]) -> Union[schemas.Sl2PointDocument,
                                                                   schemas.UnipotentPointDocument]:
        return schemas.parse_reduction(data)

    def import_reduction(self, file_path: str, **options):
        return self.reduction_from_data(self.load(file_path, **options))
