# /src/models/models.py

"""Pydantic documents: descriptor inputs and the JSON reports written by the command line."""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, field_validator

from src.charfunc import CharFunction, Ring, make_char
from src.polytope import SimplePolytope, build_polytope
from src.spaces import Family
from src.utils.errors import ParseError


# --- inputs ----------------------------------------------------------------

class PolytopeDocument(BaseModel):
    name: Optional[str] = None
    dim: int
    facets: Optional[List[str]] = None
    vertices: Dict[str, List[str]]
    coordinates: Optional[Dict[str, List[Union[int, str]]]] = None

    @field_validator("dim")
    @classmethod
    def check_dim(cls, value: int) -> int:
        if value < 0:
            raise ValueError("dim must be non-negative")
        return value

    def to_polytope(self) -> SimplePolytope:
        coordinates = None
        if self.coordinates is not None:
            coordinates = {v: [Fraction(x) for x in xs] for v, xs in self.coordinates.items()}
        return build_polytope(self.vertices, self.dim, facets=self.facets, coordinates=coordinates)

    @classmethod
    def from_polytope(cls, P: SimplePolytope, name: Optional[str] = None) -> "PolytopeDocument":
        coordinates = None
        if P.coordinates is not None:
            coordinates = {v: [str(x) for x in P.coordinates[v]] for v in P.vertices}
        return cls(
            name=name,
            dim=P.dim,
            facets=list(P.facets),
            vertices={v: list(P.sort_facets(P.incidence[v])) for v in P.vertices},
            coordinates=coordinates,
        )


class CharFunctionDocument(BaseModel):
    model_config = {"populate_by_name": True}

    ring: Ring = Ring.Z
    vectors: Dict[str, List[int]] = Field(alias="lambda")

    def to_char(self) -> CharFunction:
        return make_char(self.vectors, self.ring)

    @classmethod
    def from_char(cls, char: CharFunction) -> "CharFunctionDocument":
        return cls(ring=char.ring, vectors={f: list(v) for f, v in zip(char.facets, char.vectors)})


class SpaceDescriptor(BaseModel):
    family: Family
    m: List[int]
    pairs: List[Tuple[int, int]] = []
    cp: Optional[List[int]] = None
    rp: Optional[List[int]] = None
    polytope: Optional[Union[str, PolytopeDocument]] = None
    char: Optional[Union[str, CharFunctionDocument]] = None
    r: Optional[int] = None
    variable: str = "u"
    name: Optional[str] = None

    @field_validator("m")
    @classmethod
    def check_m(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("m needs at least one sphere dimension")
        if any(x < 1 for x in value):
            raise ValueError("sphere dimensions must be positive")
        return value


def parse_descriptor(text: str) -> SpaceDescriptor:
    try:
        return SpaceDescriptor.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(x) for x in first["loc"])
        raise ParseError(f"descriptor field {where}: {first['msg']}") from e


# --- reports ---------------------------------------------------------------

class HVectorReport(BaseModel):
    polytope: str
    order: List[str]
    indices: Dict[str, int]
    h: List[int]


class CohomologyReport(BaseModel):
    space: str
    ring: str
    poincare: List[int]
    total: int
    relations: List[str] = []
    basis: Optional[Dict[str, List[str]]] = None
    base_ring_certified: bool = True


class HomologyReport(BaseModel):
    space: str
    twisted: bool
    homology: List[str]
    cohomology: List[str]
    euler: int
    prediction_agrees: bool
    mismatches: List[str] = []
    matrices: Optional[Dict[str, List[Tuple[int, int, int]]]] = None


class ClassReport(BaseModel):
    space: str
    kind: str
    value: str
    components: Dict[str, str] = {}
    trivial: bool


class EulerReport(BaseModel):
    space: str
    euler: int
    betti_euler: Optional[int] = None
    cellular_euler: Optional[int] = None


class BoundModel(BaseModel):
    value: int
    provenance: str


class SpanReportModel(BaseModel):
    space: str
    dim: int
    euler: int
    span_lower: int
    span_upper: int
    span_cited: int
    provenance: str
    lower_bounds: List[BoundModel]
    stasp_equals_span: bool
    stasp_note: str
    stably_parallelizable: str
    reason: str


class VerificationModel(BaseModel):
    family: str
    fields: int
    involution: str
    trials: int
    seed: int
    checked_points: int
    ok: bool
    counterexamples: List[str] = []


class FullReport(BaseModel):
    space: str
    hvector: Optional[HVectorReport] = None
    cohomology: List[CohomologyReport] = []
    homology: Optional[HomologyReport] = None
    classes: List[ClassReport] = []
    euler: Optional[EulerReport] = None
    span: Optional[SpanReportModel] = None
    fields: Optional[VerificationModel] = None
    skipped: Dict[str, str] = {}
