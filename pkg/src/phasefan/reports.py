"""Reports returned by the checkers and printed by the command line."""

from typing import List, Literal

from pydantic import BaseModel, Field

Face = List[List[str]]


class Violation(BaseModel):
    """One failed condition of a phase structure."""

    condition: Literal['parallel', 'ambient', 'even covering', 'necklace']
    face: Face
    points: List[str] = Field(default_factory=list)
    message: str = ''


class NecklaceRecord(BaseModel):
    """The necklace ordering of the facets around a codimension-one face."""

    face: Face
    ordering: List[Face]


class PhaseReport(BaseModel):
    """Outcome of checking a phase structure."""

    ok: bool
    mode: Literal['affine', 'projective']
    checked: Literal['even covering', 'necklace']
    facets: int = 0
    codim1_faces: int = 0
    violations: List[Violation] = Field(default_factory=list)
    necklaces: List[NecklaceRecord] = Field(default_factory=list)


class AxiomViolation(BaseModel):
    """A covector axiom, or a construction step, and the sign vectors witnessing its failure."""

    axiom: str
    witnesses: List[str]


class AxiomReport(BaseModel):
    """Outcome of checking the covector axioms."""

    ok: bool
    covectors: int = 0
    topes: int = 0
    violations: List[AxiomViolation] = Field(default_factory=list)


class SignedCircuitReport(BaseModel):
    """The signed circuits recovered from a phase structure."""

    elements: List[str]
    circuits: List[str]


class CountReport(BaseModel):
    """A count, with the flag telling whether the enumeration ran to the end."""

    command: str
    count: int
    complete: bool = True


class SearchReport(CountReport):
    """Phase structures found by exhaustive search."""

    mode: Literal['affine', 'projective'] = 'affine'
    up_to_reorientation: bool = False
    structures: List[dict] = Field(default_factory=list)


class SubfanReport(BaseModel):
    """Outcome of comparing two phase structures."""

    fan_contained: bool
    real_subfan: bool
    failing_face: Face | None = None


class NecklaceClass(BaseModel):
    """Structures sharing the same necklace orderings at every codimension-one face."""

    structures: int
    reorientation_classes: int
    necklaces: List[NecklaceRecord]


class NecklaceClassesReport(BaseModel):
    """Grouping of all phase structures of a matroid by their necklace orderings."""

    mode: Literal['affine', 'projective']
    structures: int
    classes: List[NecklaceClass]


class ErrorReport(BaseModel):
    """Malformed input, with one JSON pointer per problem."""

    error: str
    problems: List[dict] = Field(default_factory=list)


class FixtureSummary(BaseModel):
    """One document of the fixture catalog."""

    name: str
    kind: Literal['matroid', 'oriented', 'phase']
    description: str = ''


class FixtureListReport(BaseModel):
    """The fixture documents available, or the files they were written to."""

    fixtures: List[FixtureSummary] = Field(default_factory=list)
    files: List[str] = Field(default_factory=list)
