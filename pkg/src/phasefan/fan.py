"""The fine fan of a matroid, described by chains of flats."""

import logging
from dataclasses import dataclass
from functools import cached_property, total_ordering
from typing import Iterable, Iterator, Literal

import networkx as nx

from .gf2 import LinearSubspace
from .matroid import ChainOfFlats, Matroid, Subset

LOG = logging.getLogger(__name__)

Mode = Literal['affine', 'projective']
MODES = ('affine', 'projective')

Step = Literal['deletion', 'contraction']


class FaceError(ValueError):
    """A chain is not a face of the fan, or not a face of the expected kind."""


def check_mode(mode: str) -> Mode:
    if mode not in MODES:
        raise ValueError(f'Unknown mode {mode!r}, expected one of {MODES}')
    return mode


@total_ordering
@dataclass(frozen=True)
class FanFace:
    """
    A cone of the fan, identified by its chain of proper nonempty flats.

    Attributes
    ----------
    chain : ChainOfFlats
        The flats, bottom first, as bitmasks over the fan's ground set.
    """

    chain: ChainOfFlats

    @classmethod
    def of(cls, flats: Iterable[int]) -> 'FanFace':
        return cls(ChainOfFlats(tuple(flats)))

    def dim(self, mode: Mode = 'affine') -> int:
        return len(self.chain) + (1 if mode == 'affine' else 0)

    def __lt__(self, other: 'FanFace') -> bool:
        return self.chain < other.chain

    def __len__(self) -> int:
        return len(self.chain)

    @property
    def flats(self) -> tuple[int, ...]:
        return self.chain.flats

    def contains(self, other: 'FanFace') -> bool:
        """Whether ``other`` is a face of this cone."""
        return self.chain.contains(other.chain)


class MatroidFan:
    """
    The fine fan of a matroid.

    Loops are contracted first, so the fan lives on the non-loop elements.

    Attributes
    ----------
    carrier : Matroid
        The matroid the fan was requested for.
    matroid : Matroid
        The loopless matroid whose flats describe the fan.
    """

    def __init__(self, matroid: Matroid):
        """
        Initialize the fan.

        Parameters
        ----------
        matroid : Matroid
            Any matroid; its loops are contracted.
        """
        self.carrier = matroid
        self.matroid = matroid.contract(matroid.loops) if matroid.loops else matroid
        self.lattice = self.matroid.lattice()
        self._minor_fans: dict[tuple[str, str], MatroidFan] = {}

    def __repr__(self):
        return f'MatroidFan(rank={self.rank}, ground={list(self.ground)})'

    @property
    def ground(self) -> tuple[str, ...]:
        return self.matroid.ground

    @property
    def size(self) -> int:
        return self.matroid.size

    @property
    def rank(self) -> int:
        return self.matroid.rank()

    def dim(self, mode: Mode = 'affine') -> int:
        return self.rank if mode == 'affine' else self.rank - 1

    @property
    def ambient(self) -> dict[str, int]:
        """Mask of the coordinates each mode's spaces live in."""
        full = self.matroid.full
        return {'affine': full, 'projective': full & ~1}

    def face(self, flats: Iterable[Subset]) -> FanFace:
        """
        Build a validated face from subsets of the ground set.

        Parameters
        ----------
        flats : Iterable[int | Iterable[str]]
            Proper nonempty flats forming a chain, in any order.

        Returns
        -------
        FanFace
            The face.

        Raises
        ------
        FaceError
            If a set is not a proper nonempty flat or the sets do not form a chain.
        """
        masks = sorted({self.matroid.mask(flat) for flat in flats}, key=int.bit_count)
        for mask in masks:
            if mask in (0, self.matroid.full) or not self.matroid.is_flat(mask):
                raise FaceError(
                    f'{list(self.matroid.labels(mask))} is not a proper nonempty flat'
                )
        try:
            return FanFace.of(masks)
        except ValueError as error:
            raise FaceError(str(error)) from None

    def describe(self, face: FanFace) -> list[list[str]]:
        return [list(self.matroid.labels(flat)) for flat in face.flats]

    def _steps(self, face: FanFace) -> list[int]:
        return [0, *face.flats, self.matroid.full]

    @cached_property
    def _facets(self) -> tuple[FanFace, ...]:
        top_rank = self.rank - 1
        found = []

        def extend(chain: tuple[int, ...], flat: int) -> None:
            if self.lattice.rank_of[flat] >= top_rank:
                found.append(FanFace.of(chain))
                return
            for upper in self.lattice.covers(flat):
                extend(chain + (upper,), upper)

        if self.rank == 0:
            found.append(FanFace.of(()))
        else:
            extend((), 0)
        LOG.debug('%r has %d facets', self, len(found))
        return tuple(sorted(found))

    def facets(self) -> tuple[FanFace, ...]:
        """
        The maximal cones, one per maximal chain of flats.

        Returns
        -------
        tuple[FanFace, ...]
            The facets, sorted.
        """
        return self._facets

    def is_facet(self, face: FanFace) -> bool:
        return face in self._facet_set

    @cached_property
    def _facet_set(self) -> frozenset[FanFace]:
        return frozenset(self._facets)

    def codim1_faces(self) -> tuple[FanFace, ...]:
        faces = {
            FanFace(facet.chain.without(flat)) for facet in self._facets for flat in facet.flats
        }
        return tuple(sorted(faces))

    def faces(self) -> tuple[FanFace, ...]:
        """
        Every cone of the fan, including the one with the empty chain.

        Returns
        -------
        tuple[FanFace, ...]
            All chains of proper nonempty flats, sorted.
        """
        proper = [
            flat.elements
            for flat in self.lattice.flats
            if flat.elements not in (0, self.matroid.full)
        ]
        found = []

        def extend(chain: tuple[int, ...]) -> None:
            found.append(FanFace.of(chain))
            last = chain[-1] if chain else 0
            for flat in proper:
                if flat != last and not last & ~flat:
                    extend(chain + (flat,))

        extend(())
        return tuple(sorted(found))

    def gap(self, face: FanFace) -> tuple[int, int]:
        """
        The unique pair of consecutive flats whose ranks differ by two.

        Parameters
        ----------
        face : FanFace
            A codimension-one face.

        Returns
        -------
        tuple[int, int]
            The lower and upper flat of the gap.

        Raises
        ------
        FaceError
            If the face is not of codimension one.
        """
        steps = self._steps(face)
        jumps = [
            (lower, upper, self.matroid.rank(upper) - self.matroid.rank(lower))
            for lower, upper in zip(steps, steps[1:])
        ]
        wide = [(lower, upper) for lower, upper, jump in jumps if jump == 2]
        if len(wide) != 1 or any(jump not in (1, 2) for *_, jump in jumps):
            raise FaceError(f'{self.describe(face)} is not a codimension-one face')
        return wide[0]

    def adjacent_facets(self, face: FanFace) -> tuple[FanFace, ...]:
        """
        The facets around a codimension-one face.

        Parameters
        ----------
        face : FanFace
            A codimension-one face.

        Returns
        -------
        tuple[FanFace, ...]
            One facet per flat strictly inside the rank-two gap, sorted.
        """
        lower, upper = self.gap(face)
        return tuple(
            sorted(
                FanFace(face.chain.with_flat(flat))
                for flat in self.lattice.interval(lower, upper)
            )
        )

    def facets_containing(self, face: FanFace) -> tuple[FanFace, ...]:
        return tuple(facet for facet in self._facets if facet.contains(face))

    def adjacency_graph(self) -> nx.Graph:
        """Facets joined when they share a codimension-one face."""
        graph = nx.Graph()
        graph.add_nodes_from(self._facets)
        for face in self.codim1_faces():
            around = self.adjacent_facets(face)
            graph.add_edges_from(
                (a, b) for k, a in enumerate(around) for b in around[k + 1 :]
            )
        return graph

    def facet_order(self) -> list[FanFace]:
        """
        Facets in breadth-first order from the smallest one.

        Returns
        -------
        list[FanFace]
            Every facet once; each one after the first is adjacent to an earlier one
            whenever the fan is connected through codimension one.
        """
        graph = self.adjacency_graph()
        order: list[FanFace] = []
        for source in self._facets:
            if source in order:
                continue
            order.append(source)
            order.extend(v for _, v in nx.bfs_edges(graph, source, sort_neighbors=sorted))
        return order

    def project(self, vector: int) -> int:
        """Representative modulo the all-ones vector with a zero first coordinate."""
        return vector ^ self.matroid.full if vector & 1 else vector

    def tangent(self, face: FanFace, mode: Mode = 'affine') -> LinearSubspace:
        """
        The tangent space of a cone reduced modulo two.

        Parameters
        ----------
        face : FanFace
            A cone of the fan.
        mode : {'affine', 'projective'}, optional
            In projective mode vectors are taken modulo the all-ones vector.

        Returns
        -------
        LinearSubspace
            The span of the flat indicator vectors of the chain and of the ground set.
        """
        generators = [*face.flats, self.matroid.full]
        if check_mode(mode) == 'projective':
            generators = [self.project(vector) for vector in generators]
        return LinearSubspace.span(generators, self.size)

    def minor_fan(self, step: Step, label: str) -> 'MatroidFan':
        """The fan of the deletion or contraction of one element."""
        key = (step, str(label))
        if key not in self._minor_fans:
            if step == 'deletion':
                minor = self.matroid.delete(label)
            elif step == 'contraction':
                minor = self.matroid.contract(label)
            else:
                raise ValueError(f'Unknown minor step {step!r}')
            self._minor_fans[key] = MatroidFan(minor)
        return self._minor_fans[key]

    def _import(self, mask: int, other: 'MatroidFan') -> int:
        return self.matroid.mask(other.matroid.labels(mask))

    def lift_facet(self, sigma: FanFace, step: Step, label: str) -> FanFace:
        """
        The facet of this fan that projects onto a facet of a single-element minor.

        Parameters
        ----------
        sigma : FanFace
            A facet of ``self.minor_fan(step, label)``.
        step : {'deletion', 'contraction'}
            Which minor ``sigma`` belongs to.
        label : str
            The deleted or contracted element.

        Returns
        -------
        FanFace
            The lifted facet.

        Raises
        ------
        FaceError
            If ``sigma`` is not a facet of the minor fan.
        """
        minor = self.minor_fan(step, label)
        if not minor.is_facet(sigma):
            raise FaceError(f'{minor.describe(sigma)} is not a facet of the {step} by {label}')
        element = self.matroid.mask(label)
        flats = [self._import(flat, minor) for flat in sigma.flats]
        if step == 'deletion' and not self.matroid.coloops & element:
            lifted = [self.matroid.closure(flat) for flat in flats]
        elif step == 'deletion':
            lifted = [element, *(flat | element for flat in flats)]
        else:
            parallel = self.matroid.closure(element)
            lifted = [parallel, *(flat | parallel for flat in flats)]
        lifted = [flat for flat in lifted if flat != self.matroid.full]
        face = FanFace.of(lifted)
        if not self.is_facet(face):
            raise FaceError(f'Lift {self.describe(face)} is not a facet')
        return face

    def contains(self, other: 'MatroidFan') -> bool:
        """
        Whether the fan of ``other`` contains this fan.

        Parameters
        ----------
        other : MatroidFan
            A fan on the same ground set.

        Returns
        -------
        bool
            True when every flat of this fan's matroid is a flat of ``other``'s.
        """
        return self.matroid.is_quotient(other.matroid)

    def __iter__(self) -> Iterator[FanFace]:
        return iter(self._facets)

    def __len__(self) -> int:
        return len(self._facets)
