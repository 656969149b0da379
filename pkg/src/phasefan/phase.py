"""Real phase structures on matroid fans."""

import logging
from functools import reduce
from typing import Iterable, Mapping

from .fan import FanFace, MatroidFan, Mode, check_mode
from .gf2 import (
    AffineSubspace,
    BitVector,
    LinearSubspace,
    NecklaceError,
    NecklaceOrdering,
    SizeMismatchError,
    as_bits,
    necklace_check,
    odd_points,
)
from .matroid import LabelError, Matroid, Subset
from .reports import NecklaceRecord, PhaseReport, Violation

LOG = logging.getLogger(__name__)


class IncompletePhaseStructureError(ValueError):
    """The assignment does not cover exactly the facets of the fan."""


class InvalidPhaseStructureError(ValueError):
    """An operation needing a valid phase structure met an invalid one."""


class RealPhaseStructure:
    """
    An assignment of affine subspaces of Z_2^E to the facets of a matroid fan.

    The spaces live on the coordinates of the fan, i.e. the non-loop elements of
    the carrier. In projective mode they are taken modulo the all-ones vector and
    written with a zero first coordinate.

    Attributes
    ----------
    matroid : Matroid
        The carrier matroid, loops allowed.
    fan : MatroidFan
        Its fan.
    mode : {'affine', 'projective'}
        Which fan the structure lives on.
    assignment : dict[FanFace, AffineSubspace]
        One space per facet.
    """

    def __init__(
        self,
        matroid: Matroid,
        assignment: Mapping[FanFace, AffineSubspace],
        mode: Mode = 'affine',
        fan: MatroidFan | None = None,
    ):
        """
        Initialize a phase structure; nothing beyond totality is checked.

        Parameters
        ----------
        matroid : Matroid
            The carrier matroid.
        assignment : Mapping[FanFace, AffineSubspace]
            The space of every facet.
        mode : {'affine', 'projective'}, optional
            By default 'affine'.
        fan : MatroidFan, optional
            The fan of ``matroid`` if already built.

        Raises
        ------
        IncompletePhaseStructureError
            If a facet has no space or a non-facet has one.
        """
        self.matroid = matroid
        self.fan = fan if fan is not None else MatroidFan(matroid)
        self.mode = check_mode(mode)
        self.assignment = dict(assignment)
        facets = set(self.fan.facets())
        missing = facets - set(self.assignment)
        extra = set(self.assignment) - facets
        if missing or extra:
            raise IncompletePhaseStructureError(
                f'{len(missing)} facets without a space and {len(extra)} spaces on non-facets'
            )
        for space in self.assignment.values():
            if space.ground_size != self.fan.size:
                raise SizeMismatchError(
                    f'Space over {space.ground_size} coordinates on a fan over {self.fan.size}'
                )

    def __repr__(self):
        return f'RealPhaseStructure({self.mode}, {self.matroid!r}, {len(self.assignment)} facets)'

    def __getitem__(self, facet: FanFace) -> AffineSubspace:
        return self.assignment[facet]

    def __eq__(self, other):
        if not isinstance(other, RealPhaseStructure):
            return NotImplemented
        return (
            self.mode == other.mode
            and self.fan.matroid == other.fan.matroid
            and self.assignment == other.assignment
        )

    def __hash__(self):
        return hash((self.mode, self.fan.matroid, self.key()))

    def key(self) -> tuple[int, ...]:
        """Basepoints in facet order; with the tangents fixed this identifies the structure."""
        return tuple(self.assignment[facet].base for facet in self.fan.facets())

    def _bits(self, point: int) -> str:
        return BitVector(point, self.fan.size).to_string()

    def _parallel_violations(self) -> dict[FanFace, Violation]:
        ambient = self.fan.ambient[self.mode]
        found = {}
        for facet in self.fan.facets():
            space = self.assignment[facet]
            face = self.fan.describe(facet)
            if space.base & ~ambient:
                found[facet] = Violation(
                    condition='ambient',
                    face=face,
                    points=[self._bits(space.base)],
                    message='projective spaces have a zero first coordinate',
                )
            elif space.tangent != self.fan.tangent(facet, self.mode):
                found[facet] = Violation(
                    condition='parallel',
                    face=face,
                    message=f'space {space!r} is not parallel to the facet',
                )
        return found

    def verify(self) -> PhaseReport:
        """
        Check that every space is parallel to its facet and that the spaces cover
        evenly around every codimension-one face.

        Returns
        -------
        PhaseReport
            The report; its violations name the face and the odd points.
        """
        violations = list(self._parallel_violations().values())
        codim1 = self.fan.codim1_faces()
        for tau in codim1:
            spaces = [self.assignment[sigma] for sigma in self.fan.adjacent_facets(tau)]
            odd = odd_points(spaces)
            if odd:
                violations.append(
                    Violation(
                        condition='even covering',
                        face=self.fan.describe(tau),
                        points=[self._bits(point) for point in odd],
                        message=f'{len(odd)} points covered an odd number of times',
                    )
                )
        LOG.debug('Even covering check found %d violations', len(violations))
        return PhaseReport(
            ok=not violations,
            mode=self.mode,
            checked='even covering',
            facets=len(self.assignment),
            codim1_faces=len(codim1),
            violations=violations,
        )

    def _necklace(self, tau: FanFace) -> NecklaceOrdering | None:
        around = self.fan.adjacent_facets(tau)
        shared = self.fan.tangent(tau, self.mode)
        lines = [self.assignment[sigma].quotient(shared) for sigma in around]
        ordering = necklace_check(lines)
        if ordering is None:
            return None
        return NecklaceOrdering.from_cycle(around[k] for k in ordering.items)

    def verify_necklace(self) -> PhaseReport:
        """
        Check parallelism and the necklace condition at every codimension-one face.

        Returns
        -------
        PhaseReport
            The report, with the necklace ordering of every face that has one.
        """
        parallel = self._parallel_violations()
        violations = list(parallel.values())
        necklaces = []
        codim1 = self.fan.codim1_faces()
        for tau in codim1:
            around = self.fan.adjacent_facets(tau)
            face = self.fan.describe(tau)
            if any(sigma in parallel for sigma in around):
                continue
            try:
                ordering = self._necklace(tau)
            except NecklaceError as error:
                violations.append(Violation(condition='necklace', face=face, message=str(error)))
                continue
            if ordering is None:
                violations.append(
                    Violation(
                        condition='necklace',
                        face=face,
                        message='the projected lines do not form a single cycle',
                    )
                )
                continue
            necklaces.append(
                NecklaceRecord(
                    face=face, ordering=[self.fan.describe(sigma) for sigma in ordering]
                )
            )
        return PhaseReport(
            ok=not violations,
            mode=self.mode,
            checked='necklace',
            facets=len(self.assignment),
            codim1_faces=len(codim1),
            violations=violations,
            necklaces=necklaces,
        )

    def equivalence_witness(self) -> bool:
        """Whether the even-covering and necklace checkers agree on this structure."""
        return self.verify().ok == self.verify_necklace().ok

    def necklace_ordering_at(self, tau: FanFace) -> NecklaceOrdering:
        """
        The cyclic order of the facets around a codimension-one face.

        Parameters
        ----------
        tau : FanFace
            A codimension-one face.

        Returns
        -------
        NecklaceOrdering
            Items are the adjacent facets.

        Raises
        ------
        InvalidPhaseStructureError
            If the spaces around ``tau`` do not form a necklace.
        """
        try:
            ordering = self._necklace(tau)
        except NecklaceError as error:
            raise InvalidPhaseStructureError(str(error)) from None
        if ordering is None:
            raise InvalidPhaseStructureError(
                f'No necklace around {self.fan.describe(tau)}'
            )
        return ordering

    def necklace_signature(self) -> tuple[tuple[FanFace, NecklaceOrdering], ...]:
        """All necklace orderings, keyed by codimension-one face in sorted order."""
        return tuple((tau, self.necklace_ordering_at(tau)) for tau in self.fan.codim1_faces())

    def _vector(self, epsilon: 'BitVector | int | Subset') -> int:
        if isinstance(epsilon, (BitVector, int)):
            bits = as_bits(epsilon, self.fan.size)
        else:
            bits = self.fan.matroid.mask(epsilon)
        return self.fan.project(bits) if self.mode == 'projective' else bits

    def reorient(self, epsilon: 'BitVector | int | Subset') -> 'RealPhaseStructure':
        """
        Translate every space by the same vector.

        Parameters
        ----------
        epsilon : BitVector | int | Iterable[str]
            A vector, or the labels of the elements to flip.

        Returns
        -------
        RealPhaseStructure
            The reoriented structure.
        """
        vector = self._vector(epsilon)
        return self._replace(
            {facet: space.translate(vector) for facet, space in self.assignment.items()}
        )

    def _replace(self, assignment, matroid=None, fan=None, mode=None) -> 'RealPhaseStructure':
        return RealPhaseStructure(
            matroid if matroid is not None else self.matroid,
            assignment,
            mode=mode or self.mode,
            fan=fan if fan is not None or matroid is not None else self.fan,
        )

    def _points_at(self, face: FanFace) -> set[int]:
        points: set[int] = set()
        for facet in self.fan.facets_containing(face):
            points.update(self.assignment[facet].points())
        return points

    def extend_to_face(self, face: FanFace) -> frozenset[BitVector]:
        """
        The union of the spaces of all facets containing a face.

        Parameters
        ----------
        face : FanFace
            Any face of the fan.

        Returns
        -------
        frozenset[BitVector]
            The points; in general not an affine subspace.
        """
        return frozenset(BitVector(point, self.fan.size) for point in self._points_at(face))

    def to_projective(self) -> 'RealPhaseStructure':
        """The corresponding structure on the projective fan."""
        if self.mode == 'projective':
            return self
        project = self.fan.project
        return self._replace(
            {
                facet: AffineSubspace.from_generators(
                    project(space.base),
                    (project(row) for row in space.tangent.basis),
                    self.fan.size,
                )
                for facet, space in self.assignment.items()
            },
            mode='projective',
        )

    def to_affine(self) -> 'RealPhaseStructure':
        """The corresponding structure on the affine fan."""
        if self.mode == 'affine':
            return self
        full = self.fan.matroid.full
        return self._replace(
            {
                facet: AffineSubspace.from_generators(
                    space.base, (*space.tangent.basis, full), self.fan.size
                )
                for facet, space in self.assignment.items()
            },
            mode='affine',
        )

    def _step(self, step: str, label: str) -> 'RealPhaseStructure':
        minor = self.matroid.delete(label) if step == 'deletion' else self.matroid.contract(label)
        if self.matroid.is_loop(label):
            return RealPhaseStructure(minor, self.assignment, mode=self.mode)
        minor_fan = self.fan.minor_fan(step, label)
        dropped = self.fan.matroid.mask(label)
        if step == 'contraction':
            dropped = self.fan.matroid.closure(dropped)
        assignment = {
            sigma: self.assignment[self.fan.lift_facet(sigma, step, label)].project(dropped)
            for sigma in minor_fan.facets()
        }
        return RealPhaseStructure(minor, assignment, mode=self.mode, fan=MatroidFan(minor))

    def phase_minor(
        self, delete: Subset = 0, contract: Subset = 0, check: bool = True
    ) -> 'RealPhaseStructure':
        """
        The induced structure on a minor, one element at a time.

        Parameters
        ----------
        delete : int | Iterable[str], optional
            Elements of the carrier to delete.
        contract : int | Iterable[str], optional
            Elements of the carrier to contract.
        check : bool, optional
            Whether to verify this structure first, by default True. Minors are
            only defined for valid structures.

        Returns
        -------
        RealPhaseStructure
            The structure on the fan of ``matroid.minor(delete, contract)``, in the
            same mode.

        Raises
        ------
        InvalidPhaseStructureError
            If ``check`` is set and the structure fails verification.
        """
        delete, contract = self.matroid.mask(delete), self.matroid.mask(contract)
        if delete & contract:
            raise ValueError(
                f'Cannot both delete and contract {list(self.matroid.labels(delete & contract))}'
            )
        if check:
            report = self.verify()
            if not report.ok:
                first = report.violations[0]
                raise InvalidPhaseStructureError(
                    f'No minors of an invalid structure: {first.condition} fails at {first.face}'
                )
        structure = self.to_affine()
        for label in self.matroid.labels(contract):
            structure = structure._step('contraction', label)
        for label in self.matroid.labels(delete):
            structure = structure._step('deletion', label)
        return structure.to_projective() if self.mode == 'projective' else structure

    def is_real_subfan(self, other: 'RealPhaseStructure') -> bool:
        """
        Whether this structure is a real subfan of ``other``.

        Parameters
        ----------
        other : RealPhaseStructure
            A structure in the same mode on a fan over the same ground set.

        Returns
        -------
        bool
            True when this fan lies in the other one and at every face of this fan
            the union of its spaces is contained in the other structure's union.
        """
        return self.subfan_failure(other) is None and self.fan.contains(other.fan)

    def subfan_failure(self, other: 'RealPhaseStructure') -> FanFace | None:
        """The first face where the union of spaces is not contained in the other's, if any."""
        if self.fan.ground != other.fan.ground:
            raise LabelError(
                f'Ground sets differ: {list(self.fan.ground)} and {list(other.fan.ground)}'
            )
        if self.mode != other.mode:
            raise ValueError(f'Modes differ: {self.mode} and {other.mode}')
        if not self.fan.contains(other.fan):
            return None
        for face in self.fan.faces():
            if not self._points_at(face) <= other._points_at(face):
                LOG.debug('Union not contained at %s', self.fan.describe(face))
                return face
        return None

    def reorientation_translations(self, other: 'RealPhaseStructure') -> AffineSubspace | None:
        """
        All vectors translating this structure onto ``other``.

        Parameters
        ----------
        other : RealPhaseStructure
            A structure on the same fan and in the same mode.

        Returns
        -------
        AffineSubspace | None
            The translations, or None when the structures are not related.
        """
        if self.mode != other.mode or self.fan.matroid != other.fan.matroid:
            return None
        constraints = []
        for facet in self.fan.facets():
            mine, theirs = self.assignment[facet], other.assignment[facet]
            if mine.tangent != theirs.tangent:
                return None
            constraints.append(AffineSubspace.coset(mine.base ^ theirs.base, mine.tangent))

        def meet(a: AffineSubspace | None, b: AffineSubspace) -> AffineSubspace | None:
            return None if a is None else a.intersect(b)

        return reduce(meet, constraints[1:], constraints[0]) if constraints else None

    def equal_up_to_reorientation(self, other: 'RealPhaseStructure') -> BitVector | None:
        """
        A vector translating this structure onto ``other``, if there is one.

        Parameters
        ----------
        other : RealPhaseStructure
            A structure on the same fan and in the same mode.

        Returns
        -------
        BitVector | None
            The canonical translation, unique modulo the stabilizer.
        """
        translations = self.reorientation_translations(other)
        return None if translations is None else translations.basepoint

    def stabilizer(self) -> LinearSubspace:
        """Translations fixing every space."""
        return reduce(
            LinearSubspace.intersect,
            (space.tangent for space in self.assignment.values()),
        )


def structure_from_points(
    matroid: Matroid,
    points: Mapping[FanFace, Iterable[int]],
    mode: Mode = 'affine',
    fan: MatroidFan | None = None,
) -> RealPhaseStructure:
    """
    Build a structure from explicit point sets, checking each one is affine.

    Parameters
    ----------
    matroid : Matroid
        The carrier.
    points : Mapping[FanFace, Iterable[int]]
        The points of every facet's space.
    mode : {'affine', 'projective'}, optional
        By default 'affine'.
    fan : MatroidFan, optional
        The fan of ``matroid`` if already built.

    Returns
    -------
    RealPhaseStructure
        The structure.

    Raises
    ------
    InvalidPhaseStructureError
        If a point set is empty or not an affine subspace.
    """
    fan = fan if fan is not None else MatroidFan(matroid)
    assignment = {}
    for facet, chosen in points.items():
        chosen = set(chosen)
        if not chosen:
            raise InvalidPhaseStructureError(f'No points at {fan.describe(facet)}')
        hull = AffineSubspace.from_generators(
            min(chosen), (p ^ min(chosen) for p in chosen), fan.size
        )
        if len(hull) != len(chosen):
            raise InvalidPhaseStructureError(
                f'{len(chosen)} points at {fan.describe(facet)} do not form an affine subspace'
            )
        assignment[facet] = hull
    return RealPhaseStructure(matroid, assignment, mode=mode, fan=fan)
