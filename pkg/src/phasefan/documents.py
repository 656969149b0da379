"""Documents that describe matroids, oriented matroids and phase structures."""

from typing import Any, List, Literal

from pydantic import BaseModel, Field, field_validator

from .fan import FaceError, MatroidFan
from .gf2 import AffineSubspace, BitVector
from .matroid import Matroid
from .oriented import OrientedMatroid, SignedCircuitSet, SignVector
from .phase import RealPhaseStructure
from .sources import SOURCE_CLASSES, build_matroid
from .utils import validate_labels


class DocumentError(ValueError):
    """
    A well-formed document describing an impossible object.

    Attributes
    ----------
    pointer : str
        JSON pointer to the offending part of the document.
    """

    def __init__(self, pointer: str, message: str):
        super().__init__(f'{pointer or "/"}: {message}')
        self.pointer = pointer
        self.message = message


class MatroidDescriptor(BaseModel):
    """A matroid given by one of the kinds in ``sources.SOURCE_CLASSES``."""

    elements: List[str] = Field(min_length=1)
    by: str
    data: Any

    @field_validator('elements', mode='before')
    @classmethod
    def _labels(cls, value):
        return validate_labels(value) if isinstance(value, list) else value

    @field_validator('by')
    @classmethod
    def _known_kind(cls, value: str) -> str:
        if value not in SOURCE_CLASSES:
            raise ValueError(f'unknown matroid source, expected one of {sorted(SOURCE_CLASSES)}')
        return value

    @classmethod
    def from_matroid(cls, matroid: Matroid) -> 'MatroidDescriptor':
        """
        Describe a matroid by its bases.

        Parameters
        ----------
        matroid : Matroid
            The matroid.

        Returns
        -------
        MatroidDescriptor
            A ``bases`` descriptor.
        """
        return cls(
            elements=list(matroid.ground),
            by='bases',
            data=[list(matroid.labels(basis)) for basis in matroid.bases()],
        )

    def to_matroid(self) -> Matroid:
        try:
            return build_matroid(self.model_dump())
        except ValueError as error:
            raise DocumentError('/data', str(error)) from None


class SpaceDocument(BaseModel):
    """An affine subspace of Z_2^E as a basepoint and a list of generators."""

    basepoint: str = Field(pattern=r'^[01]*$')
    basis: List[str] = Field(default_factory=list)

    @field_validator('basis')
    @classmethod
    def _binary(cls, value: List[str]) -> List[str]:
        for vector in value:
            if any(char not in '01' for char in vector):
                raise ValueError(f'{vector!r} is not a 0/1 string')
        return value

    @classmethod
    def from_space(cls, space: AffineSubspace) -> 'SpaceDocument':
        return cls(
            basepoint=space.basepoint.to_string(),
            basis=[vector.to_string() for vector in space.basis],
        )

    def to_space(self, ground_size: int) -> AffineSubspace:
        """
        Build the affine subspace.

        Parameters
        ----------
        ground_size : int
            The number of coordinates every vector must have.

        Returns
        -------
        AffineSubspace
            The canonical form of the space.
        """
        for pointer, vector in [('/basepoint', self.basepoint)] + [
            (f'/basis/{k}', v) for k, v in enumerate(self.basis)
        ]:
            if len(vector) != ground_size:
                raise DocumentError(pointer, f'expected {ground_size} coordinates, got {len(vector)}')
        return AffineSubspace.from_generators(
            BitVector.from_string(self.basepoint),
            (BitVector.from_string(v) for v in self.basis),
            ground_size,
        )


class FacetDocument(BaseModel):
    """The space assigned to one facet, given by its chain of flats."""

    chain: List[List[str]]
    space: SpaceDocument


class PhaseDocument(BaseModel):
    """
    A real phase structure.

    The vectors of the spaces are indexed by the non-loop elements of the matroid
    in ground order.
    """

    matroid: MatroidDescriptor
    mode: Literal['affine', 'projective'] = 'affine'
    facets: List[FacetDocument]

    @classmethod
    def from_structure(
        cls, structure: RealPhaseStructure, descriptor: MatroidDescriptor | None = None
    ) -> 'PhaseDocument':
        """
        Describe a phase structure, facets in the fan's order.

        Parameters
        ----------
        structure : RealPhaseStructure
            The structure.
        descriptor : MatroidDescriptor, optional
            How to write the carrier matroid, by default by its bases.

        Returns
        -------
        PhaseDocument
            The document.
        """
        fan = structure.fan
        return cls(
            matroid=descriptor or MatroidDescriptor.from_matroid(structure.matroid),
            mode=structure.mode,
            facets=[
                FacetDocument(
                    chain=fan.describe(facet),
                    space=SpaceDocument.from_space(structure[facet]),
                )
                for facet in fan.facets()
            ],
        )

    def to_structure(self, matroid: Matroid | None = None) -> RealPhaseStructure:
        """
        Build the phase structure; nothing beyond its shape is verified.

        Parameters
        ----------
        matroid : Matroid, optional
            The carrier if already built from ``self.matroid``.

        Returns
        -------
        RealPhaseStructure
            The structure.

        Raises
        ------
        DocumentError
            If a chain is not a facet, a facet repeats or is missing, or a vector
            has the wrong length.
        """
        matroid = matroid or self.matroid.to_matroid()
        fan = MatroidFan(matroid)
        assignment = {}
        for k, facet in enumerate(self.facets):
            try:
                face = fan.face(facet.chain)
            except (FaceError, ValueError) as error:
                raise DocumentError(f'/facets/{k}/chain', str(error)) from None
            if not fan.is_facet(face):
                raise DocumentError(f'/facets/{k}/chain', 'not a maximal chain of flats')
            if face in assignment:
                raise DocumentError(f'/facets/{k}/chain', 'facet listed twice')
            try:
                assignment[face] = facet.space.to_space(fan.size)
            except DocumentError as error:
                raise DocumentError(f'/facets/{k}/space{error.pointer}', error.message) from None
        missing = [facet for facet in fan.facets() if facet not in assignment]
        if missing:
            raise DocumentError('/facets', f'no space for the facet {fan.describe(missing[0])}')
        return RealPhaseStructure(matroid, assignment, mode=self.mode, fan=fan)


class OrientedDocument(BaseModel):
    """
    An oriented matroid.

    ``data`` holds sign-vector strings over ``+``, ``-`` and ``0`` for topes,
    signed circuits and covectors, and matrix rows for ``matrix``.
    """

    elements: List[str] = Field(min_length=1)
    by: Literal['topes', 'signed_circuits', 'matrix', 'covectors']
    data: List[Any]

    @field_validator('elements', mode='before')
    @classmethod
    def _labels(cls, value):
        return validate_labels(value) if isinstance(value, list) else value

    @classmethod
    def from_oriented(
        cls, oriented: OrientedMatroid, by: Literal['topes', 'signed_circuits', 'covectors'] = 'topes'
    ) -> 'OrientedDocument':
        """
        Describe an oriented matroid by its topes, signed circuits or covectors.

        Parameters
        ----------
        oriented : OrientedMatroid
            The oriented matroid.
        by : {'topes', 'signed_circuits', 'covectors'}, optional
            By default 'topes'.

        Returns
        -------
        OrientedDocument
            The document, sign vectors sorted.
        """
        if by == 'topes':
            data = sorted(t.to_string() for t in oriented.topes())
        elif by == 'covectors':
            data = sorted(x.to_string() for x in oriented.covectors)
        elif by == 'signed_circuits':
            data = oriented.signed_circuits().to_strings()
        else:
            raise ValueError(f'Cannot describe an oriented matroid by {by!r}')
        return cls(elements=list(oriented.ground), by=by, data=data)

    def _sign_vectors(self) -> list[SignVector]:
        vectors = []
        for k, value in enumerate(self.data):
            if not isinstance(value, str) or len(value) != len(self.elements):
                raise DocumentError(
                    f'/data/{k}', f'expected a sign string with {len(self.elements)} entries'
                )
            try:
                vectors.append(SignVector.from_string(value))
            except ValueError as error:
                raise DocumentError(f'/data/{k}', str(error)) from None
        return vectors

    def to_oriented(self) -> OrientedMatroid:
        """
        Build the oriented matroid, checking the covector axioms.

        Returns
        -------
        OrientedMatroid
            The oriented matroid.

        Raises
        ------
        DocumentError
            If an entry cannot be parsed.
        InvalidOrientedMatroidError
            If the data violate an axiom.
        """
        if self.by == 'matrix':
            try:
                return OrientedMatroid.from_matrix(self.elements, self.data)
            except (TypeError, ValueError) as error:
                raise DocumentError('/data', str(error)) from None
        vectors = self._sign_vectors()
        if self.by == 'topes':
            return OrientedMatroid.from_topes(self.elements, vectors)
        if self.by == 'signed_circuits':
            try:
                circuits = SignedCircuitSet.from_vectors(self.elements, vectors)
            except ValueError as error:
                raise DocumentError('/data', str(error)) from None
            return OrientedMatroid.from_signed_circuits(circuits)
        return OrientedMatroid(self.elements, vectors)


def canonical_json(document: BaseModel) -> str:
    """
    Serialize a document or report with a fixed layout.

    Parameters
    ----------
    document : BaseModel
        Any pydantic model of this package.

    Returns
    -------
    str
        Indented JSON ending with a newline.
    """
    return document.model_dump_json(indent=2) + '\n'
