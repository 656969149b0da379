"""Oriented matroids as covector sets, and the bridge to real phase structures."""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import sympy

from .fan import FaceError, FanFace, MatroidFan, Mode
from .gf2 import MAX_GROUND
from .matroid import Matroid, Subset
from .phase import (
    InvalidPhaseStructureError,
    RealPhaseStructure,
    structure_from_points,
)
from .reports import AxiomReport, AxiomViolation
from .sources.matrix import parse_matrix
from .utils import LabelError, label_mask

LOG = logging.getLogger(__name__)

MAX_OM_GROUND = 8

SIGNS = {'+': 1, '-': -1, '0': 0}


class InvalidOrientedMatroidError(ValueError):
    """
    Data that does not describe an oriented matroid.

    Attributes
    ----------
    axiom : str
        The failed axiom or construction step.
    witnesses : list[str]
        Sign vectors or labels exhibiting the failure.
    """

    def __init__(self, axiom: str, witnesses: Sequence[str] = ()):
        self.axiom = axiom
        self.witnesses = list(witnesses)
        super().__init__(f'{axiom} fails: {", ".join(self.witnesses)}')


class CocycleError(ValueError):
    """
    The signs recovered from a phase structure are inconsistent on a circuit.

    Attributes
    ----------
    circuit : tuple[str, ...]
        The circuit.
    triple : tuple[str, str, str]
        Three of its elements whose pairwise signs multiply to -1.
    """

    def __init__(self, circuit: tuple[str, ...], triple: tuple[str, str, str]):
        self.circuit = circuit
        self.triple = triple
        super().__init__(f'Sign cocycle fails on circuit {list(circuit)} at {list(triple)}')


def _check_size(size: int, limit: int = MAX_OM_GROUND) -> None:
    if size > limit:
        raise ValueError(f'Brute-force sign vector constructions are limited to {limit} elements')


@dataclass(frozen=True, order=True)
class SignVector:
    """
    A vector with entries in {0, +1, -1}, stored as its positive and negative parts.

    Attributes
    ----------
    plus : int
        Bitmask of the positive entries.
    minus : int
        Bitmask of the negative entries.
    size : int
        The size of the ground set.
    """

    plus: int
    minus: int
    size: int

    def __post_init__(self):
        if self.plus & self.minus:
            raise ValueError('Positive and negative parts overlap')
        if (self.plus | self.minus) >> self.size or self.size > MAX_GROUND:
            raise ValueError(f'Sign vector does not fit {self.size} coordinates')

    @classmethod
    def from_string(cls, value: str) -> 'SignVector':
        """
        Parse a string over ``+``, ``-`` and ``0``.

        Parameters
        ----------
        value : str
            For example ``'+-0+'``.

        Returns
        -------
        SignVector
            The parsed vector.
        """
        if any(char not in SIGNS for char in value):
            raise ValueError(f'Not a sign vector: {value!r}')
        plus = sum(1 << k for k, char in enumerate(value) if char == '+')
        minus = sum(1 << k for k, char in enumerate(value) if char == '-')
        return cls(plus, minus, len(value))

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> 'SignVector':
        plus = sum(1 << k for k, sign in enumerate(signs) if sign > 0)
        minus = sum(1 << k for k, sign in enumerate(signs) if sign < 0)
        return cls(plus, minus, len(signs))

    @classmethod
    def zero(cls, size: int) -> 'SignVector':
        return cls(0, 0, size)

    @classmethod
    def from_exponent(cls, exponent: int, support: int, size: int) -> 'SignVector':
        """The vector ``(-1) ** exponent`` on ``support`` and zero elsewhere."""
        return cls(support & ~exponent, support & exponent, size)

    def to_string(self) -> str:
        return ''.join(
            '+' if self.plus >> k & 1 else '-' if self.minus >> k & 1 else '0'
            for k in range(self.size)
        )

    def __str__(self) -> str:
        return self.to_string()

    def __getitem__(self, position: int) -> int:
        return (self.plus >> position & 1) - (self.minus >> position & 1)

    def __neg__(self) -> 'SignVector':
        return SignVector(self.minus, self.plus, self.size)

    @property
    def support(self) -> int:
        return self.plus | self.minus

    @property
    def zeros(self) -> int:
        return ((1 << self.size) - 1) & ~self.support

    def compose(self, other: 'SignVector') -> 'SignVector':
        """``X o Y``: the entries of X, filled with those of Y where X is zero."""
        free = ~self.support
        return SignVector(
            self.plus | (other.plus & free), self.minus | (other.minus & free), self.size
        )

    def separation(self, other: 'SignVector') -> int:
        return (self.plus & other.minus) | (self.minus & other.plus)

    def reflect(self, flipped: int) -> 'SignVector':
        keep = ~flipped
        return SignVector(
            (self.plus & keep) | (self.minus & flipped),
            (self.minus & keep) | (self.plus & flipped),
            self.size,
        )

    def truncate(self, zeroed: int) -> 'SignVector':
        return SignVector(self.plus & ~zeroed, self.minus & ~zeroed, self.size)

    def conforms_to(self, other: 'SignVector') -> bool:
        """The conformal order: every nonzero entry of this vector agrees with ``other``."""
        return not self.plus & ~other.plus and not self.minus & ~other.minus

    def is_orthogonal(self, other: 'SignVector') -> bool:
        agree = (self.plus & other.plus) | (self.minus & other.minus)
        disagree = self.separation(other)
        return bool(agree) == bool(disagree)

    def project(self, keep: Sequence[int]) -> 'SignVector':
        plus = sum(1 << k for k, position in enumerate(keep) if self.plus >> position & 1)
        minus = sum(1 << k for k, position in enumerate(keep) if self.minus >> position & 1)
        return SignVector(plus, minus, len(keep))


def all_sign_vectors(size: int, support: int | None = None) -> Iterable[SignVector]:
    """Every sign vector whose support lies inside ``support``."""
    positions = [k for k in range(size) if support is None or support >> k & 1]
    for signs in itertools.product((0, 1, -1), repeat=len(positions)):
        plus = sum(1 << p for p, s in zip(positions, signs) if s == 1)
        minus = sum(1 << p for p, s in zip(positions, signs) if s == -1)
        yield SignVector(plus, minus, size)


def composition_closure(vectors: Iterable[SignVector], size: int) -> frozenset[SignVector]:
    """The zero vector together with all compositions of the given vectors."""
    closed = {SignVector.zero(size), *vectors}
    frontier = set(closed)
    while frontier:
        found = set()
        for x in frontier:
            for y in closed:
                for z in (x.compose(y), y.compose(x)):
                    if z not in closed:
                        found.add(z)
        closed |= found
        frontier = found
    return frozenset(closed)


def minimal_support(vectors: Iterable[SignVector]) -> list[SignVector]:
    """Nonzero vectors whose support contains no smaller nonzero support of the family."""
    vectors = [v for v in vectors if v.support]
    supports = {v.support for v in vectors}
    minimal = {
        s for s in supports if not any(t != s and not t & ~s for t in supports)
    }
    return sorted(v for v in vectors if v.support in minimal)


def check_axioms(covectors: Iterable[SignVector], size: int) -> AxiomReport:
    """
    Check the covector axioms.

    Parameters
    ----------
    covectors : Iterable[SignVector]
        The candidate covector set.
    size : int
        The size of the ground set.

    Returns
    -------
    AxiomReport
        The report, with the first witness found for every violated axiom.
    """
    covectors = frozenset(covectors)
    ordered = sorted(covectors)
    violations: dict[str, AxiomViolation] = {}

    def fail(axiom: str, *witnesses: SignVector) -> None:
        if axiom not in violations:
            violations[axiom] = AxiomViolation(
                axiom=axiom, witnesses=[w.to_string() for w in witnesses]
            )

    if SignVector.zero(size) not in covectors:
        fail('zero', SignVector.zero(size))
    for x in ordered:
        if -x not in covectors:
            fail('symmetry', x)
            break
    for x, y in itertools.product(ordered, repeat=2):
        if x.compose(y) not in covectors:
            fail('composition', x, y)
            break
    for x, y in itertools.combinations(ordered, 2):
        separated = x.separation(y)
        if not separated:
            continue
        # X o Y and Y o X agree off the separation set
        fixed = x.compose(y).truncate(separated)
        if not all(
            _eliminates(fixed, separated & ~(1 << e), covectors)
            for e in range(size)
            if separated >> e & 1
        ):
            fail('elimination', x, y)
            break
    return AxiomReport(
        ok=not violations,
        covectors=len(covectors),
        topes=len(_maximal(covectors)),
        violations=list(violations.values()),
    )


def _eliminates(fixed: SignVector, free: int, covectors: frozenset[SignVector]) -> bool:
    # some covector equals ``fixed`` outside ``free`` and is free inside it
    if 3 ** free.bit_count() <= len(covectors):
        return any(fixed.compose(z) in covectors for z in all_sign_vectors(fixed.size, free))
    return any(z.truncate(free) == fixed for z in covectors)


def _maximal(covectors: frozenset[SignVector]) -> frozenset[SignVector]:
    if not covectors:
        return frozenset()
    widest = max(v.support.bit_count() for v in covectors)
    return frozenset(v for v in covectors if v.support.bit_count() == widest)


@dataclass(frozen=True)
class SignedCircuitSet:
    """
    Signed circuits, closed under negation.

    Attributes
    ----------
    ground : tuple[str, ...]
        The element labels.
    circuits : frozenset[SignVector]
        Every signed circuit together with its negative.
    """

    ground: tuple[str, ...]
    circuits: frozenset[SignVector]

    @classmethod
    def from_vectors(cls, ground: Sequence[str], vectors: Iterable[SignVector]) -> 'SignedCircuitSet':
        vectors = list(vectors)
        if any(v.size != len(ground) for v in vectors):
            raise ValueError(f'Signed circuits must have {len(ground)} entries')
        if any(not v.support for v in vectors):
            raise ValueError('The zero vector is not a signed circuit')
        return cls(tuple(ground), frozenset([*vectors, *(-v for v in vectors)]))

    def representatives(self) -> list[SignVector]:
        """One vector per pair, the one positive on its first element."""
        return sorted(
            (v for v in self.circuits if v.plus & (v.support & -v.support)),
            key=lambda v: (v.support.bit_count(), [k for k in range(v.size) if v.support >> k & 1]),
        )

    def supports(self) -> list[int]:
        return sorted({v.support for v in self.circuits})

    def to_strings(self) -> list[str]:
        return [v.to_string() for v in self.representatives()]


class GammaDescription(dict):
    """
    Relative signs ``gamma[C][i, j]`` for every circuit and pair of its elements.

    Keys are circuit bitmasks; values map position pairs ``(i, j)`` with ``i < j``
    to +1 or -1.
    """

    def __init__(self, ground: Sequence[str], *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.ground = tuple(ground)

    def check_cocycle(self) -> None:
        """
        Check that the signs multiply to +1 on every triple of every circuit.

        Raises
        ------
        CocycleError
            With the first failing circuit and triple.
        """
        for circuit, signs in self.items():
            elements = [k for k in range(len(self.ground)) if circuit >> k & 1]
            for i, j, k in itertools.combinations(elements, 3):
                if signs[i, j] * signs[j, k] * signs[i, k] != 1:
                    raise CocycleError(
                        tuple(self.ground[e] for e in elements),
                        (self.ground[i], self.ground[j], self.ground[k]),
                    )

    def to_signed_circuits(self) -> SignedCircuitSet:
        """Signed circuits positive on their first element."""
        self.check_cocycle()
        vectors = []
        for circuit, signs in self.items():
            elements = [k for k in range(len(self.ground)) if circuit >> k & 1]
            first = elements[0]
            vector = [0] * len(self.ground)
            vector[first] = 1
            for other in elements[1:]:
                vector[other] = signs[first, other]
            vectors.append(SignVector.from_signs(vector))
        return SignedCircuitSet.from_vectors(self.ground, vectors)


class OrientedMatroid:
    """
    An oriented matroid given by its set of covectors.

    Attributes
    ----------
    ground : tuple[str, ...]
        The element labels.
    covectors : frozenset[SignVector]
        All covectors, the zero vector included.
    """

    def __init__(self, ground: Sequence[str], covectors: Iterable[SignVector], validate: bool = True):
        """
        Initialize an oriented matroid.

        Parameters
        ----------
        ground : Sequence[str]
            The element labels.
        covectors : Iterable[SignVector]
            The covectors.
        validate : bool, optional
            Whether to check the covector axioms, by default True.

        Raises
        ------
        InvalidOrientedMatroidError
            If an axiom fails.
        """
        self.ground = tuple(str(label) for label in ground)
        if len(set(self.ground)) != len(self.ground):
            raise LabelError(f'Repeated labels in ground set {list(self.ground)}')
        self.covectors = frozenset(covectors)
        if any(x.size != self.size for x in self.covectors):
            raise ValueError(f'Covectors must have {self.size} entries')
        if validate:
            report = self.check_axioms()
            if not report.ok:
                first = report.violations[0]
                raise InvalidOrientedMatroidError(first.axiom, first.witnesses)

    def __repr__(self):
        return f'OrientedMatroid(ground={list(self.ground)}, covectors={len(self.covectors)})'

    def __eq__(self, other):
        if not isinstance(other, OrientedMatroid):
            return NotImplemented
        return self.ground == other.ground and self.covectors == other.covectors

    def __hash__(self):
        return hash((self.ground, self.covectors))

    @property
    def size(self) -> int:
        return len(self.ground)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def mask(self, subset: Subset) -> int:
        return label_mask(self.ground, subset)

    @classmethod
    def from_topes(cls, ground: Sequence[str], topes: Iterable[SignVector]) -> 'OrientedMatroid':
        """
        Rebuild the covectors from the topes.

        A sign vector X is a covector when ``X o T`` is a tope for every tope T.

        Parameters
        ----------
        ground : Sequence[str]
            The element labels.
        topes : Iterable[SignVector]
            The topes.

        Returns
        -------
        OrientedMatroid
            The oriented matroid.

        Raises
        ------
        InvalidOrientedMatroidError
            If the reconstruction fails the axioms or does not return the topes.
        """
        topes = frozenset(topes)
        _check_size(len(ground))
        if not topes:
            raise InvalidOrientedMatroidError('nonempty tope set')
        supports = {t.support for t in topes}
        if len(supports) != 1:
            raise InvalidOrientedMatroidError('equal tope supports', [str(t) for t in sorted(topes)][:2])
        (support,) = supports
        covectors = [
            x
            for x in all_sign_vectors(len(ground), support)
            if all(x.compose(t) in topes for t in topes)
        ]
        result = cls(ground, covectors)
        if result.topes() != topes:
            missing = sorted(topes - result.topes())
            raise InvalidOrientedMatroidError('tope reconstruction', [str(t) for t in missing])
        return result

    @classmethod
    def from_signed_circuits(cls, circuits: SignedCircuitSet) -> 'OrientedMatroid':
        """
        Build the oriented matroid whose cocircuits are orthogonal to the circuits.

        Parameters
        ----------
        circuits : SignedCircuitSet
            The signed circuits.

        Returns
        -------
        OrientedMatroid
            The oriented matroid, whose signed circuits are exactly the input.

        Raises
        ------
        InvalidOrientedMatroidError
            If the data is not the signed circuit set of an oriented matroid.
        """
        size = len(circuits.ground)
        _check_size(size)
        orthogonal = [
            y
            for y in all_sign_vectors(size)
            if all(y.is_orthogonal(x) for x in circuits.circuits)
        ]
        cocircuits = minimal_support(orthogonal)
        LOG.debug('Found %d cocircuits', len(cocircuits))
        result = cls(circuits.ground, composition_closure(cocircuits, size))
        recovered = result.signed_circuits()
        if recovered.circuits != circuits.circuits:
            extra = sorted(recovered.circuits ^ circuits.circuits)
            raise InvalidOrientedMatroidError('signed circuit recovery', [str(v) for v in extra])
        return result

    @classmethod
    def from_matrix(cls, ground: Sequence[str], rows: Sequence[Sequence[int | str]]) -> 'OrientedMatroid':
        """
        The oriented matroid of the columns of a rational matrix.

        Parameters
        ----------
        ground : Sequence[str]
            One label per column.
        rows : Sequence[Sequence[int | str]]
            The matrix rows, entries exact.

        Returns
        -------
        OrientedMatroid
            The covectors are the sign vectors of the row space.
        """
        matrix = parse_matrix(rows)
        if matrix.cols != len(ground):
            raise ValueError(f'{matrix.cols} columns given for {len(ground)} elements')
        reduced, pivots = matrix.rref()
        rank = len(pivots)
        size = len(ground)
        if rank == 0:
            return cls(ground, [SignVector.zero(size)])
        basis = reduced[:rank, :]
        cocircuits = set()
        for hyperplane in itertools.combinations(range(size), rank - 1):
            block = basis.extract(list(range(rank)), list(hyperplane))
            if rank > 1 and block.rank() < rank - 1:
                continue
            signs = []
            for e in range(size):
                column = basis.extract(list(range(rank)), [e])
                value = sympy.Matrix.hstack(block, column).det() if rank > 1 else column[0]
                signs.append(int(sympy.sign(value)))
            vector = SignVector.from_signs(signs)
            cocircuits.update((vector, -vector))
        return cls(ground, composition_closure(cocircuits, size))

    def check_axioms(self) -> AxiomReport:
        return check_axioms(self.covectors, self.size)

    def topes(self) -> frozenset[SignVector]:
        return _maximal(self.covectors)

    @property
    def loops(self) -> int:
        support = 0
        for x in self.covectors:
            support |= x.support
        return self.full & ~support

    def cocircuits(self) -> list[SignVector]:
        return minimal_support(self.covectors)

    @cached_property
    def _signed_circuits(self) -> SignedCircuitSet:
        _check_size(self.size)
        orthogonal = [
            x
            for x in all_sign_vectors(self.size)
            if x.support and all(x.is_orthogonal(y) for y in self.covectors)
        ]
        return SignedCircuitSet.from_vectors(self.ground, minimal_support(orthogonal))

    def signed_circuits(self) -> SignedCircuitSet:
        """
        The minimal nonzero sign vectors orthogonal to every covector.

        Returns
        -------
        SignedCircuitSet
            The signed circuits.
        """
        return self._signed_circuits

    def gamma(self) -> GammaDescription:
        """Relative signs of the signed circuits: ``X_i * X_j``."""
        description = GammaDescription(self.ground)
        for x in self.signed_circuits().representatives():
            elements = [k for k in range(self.size) if x.support >> k & 1]
            description[x.support] = {
                (i, j): x[i] * x[j] for i, j in itertools.combinations(elements, 2)
            }
        return description

    @cached_property
    def _underlying(self) -> Matroid:
        zero_sets = sorted({x.zeros for x in self.covectors}, key=int.bit_count)
        ranks_of_flats: dict[int, int] = {}
        for flat in zero_sets:
            below = [ranks_of_flats[g] for g in ranks_of_flats if g != flat and not g & ~flat]
            ranks_of_flats[flat] = max(below) + 1 if below else 0
        ranks = []
        for mask in range(1 << self.size):
            smallest = next(flat for flat in zero_sets if not mask & ~flat)
            ranks.append(ranks_of_flats[smallest])
        return Matroid(self.ground, ranks)

    def underlying_matroid(self) -> Matroid:
        """
        The matroid whose flats are the zero sets of the covectors.

        Returns
        -------
        Matroid
            The underlying matroid.
        """
        return self._underlying

    def check_diamond(self) -> AxiomReport:
        """
        Check that every interval of length two in the face lattice has four elements.

        Returns
        -------
        AxiomReport
            Violations are reported under the ``diamond`` axiom.
        """
        matroid = self.underlying_matroid()
        full_rank = matroid.rank()

        def grade(x: SignVector) -> int:
            return full_rank - matroid.rank(x.zeros)

        by_grade: dict[int, list[SignVector]] = {}
        for x in self.covectors:
            by_grade.setdefault(grade(x), []).append(x)
        violations = []
        for x in sorted(self.covectors):
            level = grade(x)
            above = [z for z in by_grade.get(level + 2, []) if x.conforms_to(z)]
            middle = [y for y in by_grade.get(level + 1, []) if x.conforms_to(y)]
            for z in above:
                between = [y for y in middle if y.conforms_to(z)]
                if len(between) != 2:
                    violations.append(AxiomViolation(axiom='diamond', witnesses=[str(x), str(z)]))
            if level == full_rank - 1 and len(middle) != 2:
                violations.append(AxiomViolation(axiom='diamond', witnesses=[str(x)]))
        return AxiomReport(
            ok=not violations,
            covectors=len(self.covectors),
            topes=len(self.topes()),
            violations=violations[:1],
        )

    def adjacent_topes(self, flats: Iterable[Subset]) -> frozenset[SignVector]:
        """
        Topes that stay covectors when truncated along every flat of a flag.

        Parameters
        ----------
        flats : Iterable[int | Iterable[str]]
            Flats of the underlying matroid.

        Returns
        -------
        frozenset[SignVector]
            The adjacent topes.

        Raises
        ------
        FaceError
            If a set is not a flat.
        """
        matroid = self.underlying_matroid()
        masks = [matroid.mask(flat) for flat in flats]
        for mask in masks:
            if not matroid.is_flat(mask):
                raise FaceError(f'{list(matroid.labels(mask))} is not a flat')
        return frozenset(
            t
            for t in self.topes()
            if all(t.truncate(mask) in self.covectors for mask in masks)
        )

    def reorient(self, flipped: Subset) -> 'OrientedMatroid':
        mask = self.mask(flipped)
        return OrientedMatroid(
            self.ground, (x.reflect(mask) for x in self.covectors), validate=False
        )

    def minor(self, delete: Subset = 0, contract: Subset = 0) -> 'OrientedMatroid':
        """
        Delete and contract disjoint subsets.

        Parameters
        ----------
        delete : int | Iterable[str], optional
            Elements to delete.
        contract : int | Iterable[str], optional
            Elements to contract.

        Returns
        -------
        OrientedMatroid
            Deletion projects the covectors, contraction keeps those vanishing on
            the contracted elements before projecting.
        """
        delete, contract = self.mask(delete), self.mask(contract)
        if delete & contract:
            raise ValueError('Cannot both delete and contract the same element')
        keep = [k for k in range(self.size) if not (delete | contract) >> k & 1]
        return OrientedMatroid(
            [self.ground[k] for k in keep],
            (x.project(keep) for x in self.covectors if not x.support & contract),
            validate=False,
        )

    def is_quotient_of(self, other: 'OrientedMatroid') -> bool:
        """Whether every covector of this oriented matroid is a covector of ``other``."""
        if self.ground != other.ground:
            raise LabelError(f'Ground sets differ: {list(self.ground)} and {list(other.ground)}')
        return self.covectors <= other.covectors

    def is_weak_map_of(self, other: 'OrientedMatroid') -> bool:
        """Whether every tope of this oriented matroid is a tope of ``other``."""
        if self.ground != other.ground:
            raise LabelError(f'Ground sets differ: {list(self.ground)} and {list(other.ground)}')
        return self.topes() <= other.topes()

    def gamma_from_topes(self, circuit: Subset, i: str, j: str) -> int:
        """
        ``-T_i * T_j`` for the topes adjacent to the closure of the circuit minus i and j.

        Parameters
        ----------
        circuit : int | Iterable[str]
            A circuit of the underlying matroid.
        i, j : str
            Two distinct elements of the circuit.

        Returns
        -------
        int
            +1 or -1.
        """
        matroid = self.underlying_matroid()
        circuit = matroid.mask(circuit)
        a, b = matroid.index(i), matroid.index(j)
        rest = matroid.closure(circuit & ~(1 << a) & ~(1 << b))
        flats = [rest] if rest not in (matroid.loops, matroid.full) else []
        values = {-t[a] * t[b] for t in self.adjacent_topes(flats)}
        if len(values) != 1:
            raise InvalidOrientedMatroidError('tope sign consistency', [str(sorted(values))])
        return values.pop()

    def to_phase(self, mode: Mode = 'affine') -> RealPhaseStructure:
        """
        The real phase structure of the oriented matroid.

        Each facet gets the exponents of the topes adjacent to its flag; loops are
        deleted first.

        Parameters
        ----------
        mode : {'affine', 'projective'}, optional
            By default 'affine'.

        Returns
        -------
        RealPhaseStructure
            The structure on the fan of the underlying matroid.

        Raises
        ------
        InvalidOrientedMatroidError
            If some exponent set is not an affine space parallel to its facet.
        """
        carrier = self.underlying_matroid()
        fan = MatroidFan(carrier)
        loopless = self.minor(delete=self.loops) if self.loops else self
        points = {
            facet: [t.minus for t in loopless.adjacent_topes(facet.flats)]
            for facet in fan.facets()
        }
        try:
            structure = structure_from_points(carrier, points, fan=fan)
        except InvalidPhaseStructureError as error:
            raise InvalidOrientedMatroidError('affine tope sets', [str(error)]) from None
        for facet in fan.facets():
            if structure[facet].tangent != fan.tangent(facet):
                raise InvalidOrientedMatroidError('parallel tope sets', [str(fan.describe(facet))])
        return structure.to_projective() if mode == 'projective' else structure


def _flag_face(fan: MatroidFan, circuit: int, a: int, b: int) -> FanFace:
    rest = fan.matroid.closure(circuit & ~(1 << a) & ~(1 << b))
    return fan.face([rest] if rest not in (0, fan.matroid.full) else [])


def gamma_from_phase(
    structure: RealPhaseStructure,
    circuit: Subset,
    i: str,
    j: str,
    flag: FanFace | None = None,
) -> int:
    """
    The relative sign of ``i`` and ``j`` on a circuit, read off a phase structure.

    Parameters
    ----------
    structure : RealPhaseStructure
        A valid structure.
    circuit : int | Iterable[str]
        A circuit of the fan's matroid.
    i, j : str
        Two distinct elements of the circuit.
    flag : FanFace, optional
        The face to read the signs from; by default the face of the closure of the
        circuit without ``i`` and ``j``. Any face containing that one gives the
        same value on a valid structure.

    Returns
    -------
    int
        ``-(-1) ** (eps_i + eps_j)``, the same for every point ``eps`` on the face.

    Raises
    ------
    InvalidPhaseStructureError
        If the points disagree or there are none.
    """
    fan = structure.fan
    matroid = fan.matroid
    circuit = matroid.mask(circuit)
    if str(i) == str(j):
        raise ValueError('gamma needs two distinct elements')
    a, b = matroid.index(i), matroid.index(j)
    if not (circuit >> a & 1 and circuit >> b & 1):
        raise LabelError(f'{i} and {j} must both lie in the circuit')
    if circuit not in matroid.circuits():
        raise ValueError(f'{list(matroid.labels(circuit))} is not a circuit')
    if flag is None:
        flag = _flag_face(fan, circuit, a, b)
    values = {
        -1 if (point[a] ^ point[b]) == 0 else 1 for point in structure.extend_to_face(flag)
    }
    if len(values) != 1:
        raise InvalidPhaseStructureError(
            f'Signs of {i} and {j} disagree on {fan.describe(flag)}'
        )
    return values.pop()


def signed_circuits_from_phase(structure: RealPhaseStructure) -> SignedCircuitSet:
    """
    Recover the signed circuits of the oriented matroid behind a phase structure.

    Parameters
    ----------
    structure : RealPhaseStructure
        A valid structure.

    Returns
    -------
    SignedCircuitSet
        Over the carrier's ground set; every loop is a circuit of its own.

    Raises
    ------
    CocycleError
        If the recovered signs fail the cocycle condition on some circuit.
    """
    carrier = structure.matroid
    fan = structure.fan
    description = GammaDescription(carrier.ground)
    loops = []
    for circuit in carrier.circuits():
        elements = [carrier.ground[k] for k in range(carrier.size) if circuit >> k & 1]
        if len(elements) == 1:
            loops.append(circuit)
            continue
        positions = [carrier.index(label) for label in elements]
        local = fan.matroid.mask(elements)
        description[circuit] = {
            (positions[x], positions[y]): gamma_from_phase(
                structure, local, elements[x], elements[y]
            )
            for x, y in itertools.combinations(range(len(elements)), 2)
        }
    recovered = description.to_signed_circuits()
    vectors = [*recovered.circuits, *(SignVector(loop, 0, carrier.size) for loop in loops)]
    return SignedCircuitSet.from_vectors(carrier.ground, vectors)


def phase_to_oriented(structure: RealPhaseStructure) -> OrientedMatroid:
    """
    The oriented matroid whose phase structure is the given one.

    Parameters
    ----------
    structure : RealPhaseStructure
        A valid structure.

    Returns
    -------
    OrientedMatroid
        Its underlying matroid is the carrier.
    """
    return OrientedMatroid.from_signed_circuits(signed_circuits_from_phase(structure))
