"""
MHSKit Data - Schemas Module

This module defines the Pydantic models used to validate input documents:
mixed Hodge structures (mhs.json), one-variable local models (model1d.json),
fundamental-set descriptors and reduction queries. Scalars are strings in the
exact-linalg notation ("1/2", "2+3*i"); a validation failure becomes an
InputError carrying the dotted path of the offending field.
"""

from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, TypeAdapter, ValidationError, field_validator, model_validator

from mhskit.errors import InputError
from mhskit.linalg.filtration import filtration_from_rows
from mhskit.linalg.scalars import parse_scalar

Rows = List[List[str]]


def _check_scalars(rows: Rows, where: str = "") -> Rows:
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            try:
                parse_scalar(entry)
            except InputError as e:
                raise ValueError(f"{where}[{i}][{j}]: {e}")
    return rows


def _check_steps(steps: Dict[str, Rows]) -> Dict[str, Rows]:
    for key, rows in steps.items():
        try:
            int(key)
        except ValueError:
            raise ValueError(f"filtration index {key!r} is not an integer")
        _check_scalars(rows, f"[{key}]")
    return steps


def _check_widths(steps: Dict[str, Rows], width: int, name: str) -> None:
    for key, rows in steps.items():
        for row in rows:
            if len(row) != width:
                raise ValueError(f"{name}[{key}] has a row of length {len(row)}, expected {width}")


class FilteredDocument(BaseModel):
    """The weight filtration and graded polarizations shared by every structure document."""
    rank: int = Field(ge=1)
    weight: Dict[str, Rows]
    polarizations: Dict[str, Rows] = Field(default_factory=dict)

    @field_validator("weight", "polarizations")
    @classmethod
    def scalars_parse(cls, value: Dict[str, Rows]) -> Dict[str, Rows]:
        return _check_steps(value)

    @model_validator(mode="after")
    def polarized_pieces(self):
        _check_widths(self.weight, self.rank, "weight")
        graded = filtration_from_rows("weight", self.rank, self.weight).graded_dimensions()
        for k, dim in graded.items():
            if not dim:
                continue
            form = self.polarizations.get(str(k))
            if form is None:
                raise ValueError(f"missing polarization for the graded piece of weight {k}")
            if len(form) != dim or any(len(row) != dim for row in form):
                raise ValueError(f"polarization of weight {k} must be {dim} x {dim}")
        return self


class MhsDocument(FilteredDocument):
    """mhs.json; hodge_numbers and q0 are read by the membership and hodge verbs."""
    hodge: Dict[str, Rows]
    hodge_numbers: Optional[Dict[str, int]] = None
    q0: Optional[Rows] = None

    @field_validator("hodge")
    @classmethod
    def hodge_scalars(cls, value: Dict[str, Rows]) -> Dict[str, Rows]:
        return _check_steps(value)

    @field_validator("q0")
    @classmethod
    def q0_scalars(cls, value: Optional[Rows]) -> Optional[Rows]:
        return _check_scalars(value) if value is not None else value

    @field_validator("hodge_numbers")
    @classmethod
    def hodge_number_keys(cls, value: Optional[Dict[str, int]]) -> Optional[Dict[str, int]]:
        for key, h in (value or {}).items():
            parts = key.split(",")
            if len(parts) != 2 or not all(p.strip().lstrip("-").isdigit() for p in parts):
                raise ValueError(f"Hodge number key {key!r} is not of the form 'p,q'")
            if h < 0:
                raise ValueError(f"Hodge number h^{{{key}}} is negative")
        return value

    @model_validator(mode="after")
    def hodge_widths(self):
        _check_widths(self.hodge, self.rank, "hodge")
        return self


class Model1dDocument(FilteredDocument):
    """model1d.json; psi maps p to generator rows whose entries are coefficient lists in q."""
    nilpotent: Rows
    psi: Dict[str, List[List[List[str]]]]
    spot_points: List[Tuple[str, str]] = Field(default_factory=list)

    @field_validator("nilpotent")
    @classmethod
    def nilpotent_scalars(cls, value: Rows) -> Rows:
        return _check_scalars(value)

    @field_validator("psi")
    @classmethod
    def psi_scalars(cls, value: Dict[str, List[List[List[str]]]]) -> Dict[str, List[List[List[str]]]]:
        if not value:
            raise ValueError("psi needs at least one Hodge step")
        for key, rows in value.items():
            int(key)
            for row in rows:
                for entry in row:
                    for coefficient in entry:
                        parse_scalar(coefficient)
        return value

    @model_validator(mode="after")
    def model_widths(self):
        if len(self.nilpotent) != self.rank or any(len(row) != self.rank for row in self.nilpotent):
            raise ValueError(f"nilpotent must be {self.rank} x {self.rank}")
        for key, rows in self.psi.items():
            for row in rows:
                if len(row) != self.rank:
                    raise ValueError(f"psi[{key}] has a row of length {len(row)}, expected {self.rank}")
        return self


class StripDocument(BaseModel):
    kind: Literal["strip"]
    direction: Tuple[str, str] = ("0", "1")
    offset: str
    width: str
    floor: Optional[str] = None
    period: str = "1"


class HalfPlaneDocument(BaseModel):
    kind: Literal["half-plane"]
    epsilon: str


class BoxDocument(BaseModel):
    kind: Literal["box"]
    bounds: List[Tuple[str, str]]
    lattice: Rows


class ProductDocument(BaseModel):
    kind: Literal["product"]
    bounds: List[Tuple[str, str]]
    lattice: Rows
    graded: Optional[HalfPlaneDocument] = None


DescriptorDocument = Annotated[Union[StripDocument, HalfPlaneDocument, BoxDocument, ProductDocument],
                               Field(discriminator="kind")]


class Sl2PointDocument(BaseModel):
    kind: Literal["sl2"]
    point: str


class UnipotentPointDocument(BaseModel):
    kind: Literal["unipotent"]
    coordinates: List[Union[str, float]]
    lattice: List[List[Union[str, float]]]


ReductionDocument = Annotated[Union[Sl2PointDocument, UnipotentPointDocument], Field(discriminator="kind")]


def _scalar_fields(document: Any, path: str = "") -> None:
    """Parse every string scalar of a descriptor or reduction document."""
    if isinstance(document, BaseModel):
        for name, value in document:
            if name != "kind":
                _scalar_fields(value, f"{path}.{name}" if path else name)
    elif isinstance(document, (list, tuple)):
        for i, value in enumerate(document):
            _scalar_fields(value, f"{path}.{i}")
    elif isinstance(document, str):
        try:
            parse_scalar(document)
        except InputError as e:
            raise InputError(str(e), path)


def _location(error: Dict[str, Any]) -> str:
    return ".".join(str(part) for part in error['loc']) or "<document>"


def _validate(adapter_or_model: Any, data: Any) -> Any:
    try:
        if isinstance(adapter_or_model, TypeAdapter):
            document = adapter_or_model.validate_python(data)
        else:
            document = adapter_or_model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise InputError(first['msg'], _location(first))
    return document


_DESCRIPTOR = TypeAdapter(DescriptorDocument)
_REDUCTION = TypeAdapter(ReductionDocument)


def parse_mhs(data: Any) -> MhsDocument:
    return _validate(MhsDocument, data)


def parse_model1d(data: Any) -> Model1dDocument:
    return _validate(Model1dDocument, data)


def parse_descriptor(data: Any) -> Union[StripDocument, HalfPlaneDocument, BoxDocument, ProductDocument]:
    document = _validate(_DESCRIPTOR, data)
    _scalar_fields(document)
    return document


def parse_reduction(data: Any) -> Union[Sl2PointDocument, UnipotentPointDocument]:
    document = _validate(_REDUCTION, data)
    _scalar_fields(document)
    return document


SCHEMAS: Dict[str, Any] = {
    'mhs': parse_mhs,
    'model1d': parse_model1d,
    'descriptor': parse_descriptor,
    'reduction': parse_reduction,
}


def detect_schema(data: Any) -> str:
    """The schema a raw document is meant for, from its tag or its keys."""
    if not isinstance(data, dict):
        raise InputError("Document must be a JSON object")
    kind = data.get('kind')
    if kind in ("sl2", "unipotent"):
        return 'reduction'
    if kind is not None:
        return 'descriptor'
    if 'nilpotent' in data or 'psi' in data:
        return 'model1d'
    return 'mhs'


def schema_check(data: Any) -> Dict[str, Any]:
    """
    Validate a document against its schema without running any mathematics.

    Returns:
        {'ok': True, 'schema': name} or {'ok': False, 'schema': name, 'path': ..., 'error': ...}
    """
    try:
        schema = detect_schema(data)
    except InputError as e:
        return {'ok': False, 'schema': None, 'path': e.path, 'error': str(e)}
    try:
        SCHEMAS[schema](data)
    except InputError as e:
        return {'ok': False, 'schema': schema, 'path': e.path, 'error': str(e)}
    return {'ok': True, 'schema': schema}
