"""Exhaustive search for the real phase structures of a matroid fan."""

import logging
from collections import Counter
from dataclasses import dataclass, field

from networkx.utils import UnionFind

from .fan import MatroidFan, Mode, check_mode
from .gf2 import AffineSubspace, LinearSubspace
from .matroid import Matroid
from .phase import RealPhaseStructure

LOG = logging.getLogger(__name__)

MAX_SEARCH_GROUND = 10


@dataclass
class SearchResult:
    """
    Structures found by a search.

    Attributes
    ----------
    structures : list[RealPhaseStructure]
        In search order.
    complete : bool
        False when the search stopped at its limit with structures left to find.
    """

    structures: list[RealPhaseStructure] = field(default_factory=list)
    complete: bool = True

    def __len__(self) -> int:
        return len(self.structures)

    def __iter__(self):
        return iter(self.structures)

    def __getitem__(self, index: int) -> RealPhaseStructure:
        return self.structures[index]


@dataclass
class _Junction:
    # one codimension-one face: positions of the facets around it in the search
    # order, and the direction of each facet's line modulo the face's tangent
    shared: LinearSubspace
    members: list[tuple[int, int]]


class PhaseStructureSearch:
    """
    Depth-first search over the canonical translates of every facet's tangent.

    Facets are visited in breadth-first order through codimension-one adjacency.
    A partial assignment is abandoned as soon as, around some codimension-one
    face, a point of the quotient is covered three times or the projected lines
    close a cycle before every adjacent facet has its line.

    Attributes
    ----------
    fan : MatroidFan
        The fan searched.
    mode : {'affine', 'projective'}
        The mode of the structures.
    """

    def __init__(self, matroid: Matroid, mode: Mode = 'affine'):
        self.matroid = matroid
        self.fan = MatroidFan(matroid)
        self.mode = check_mode(mode)
        if self.fan.size > MAX_SEARCH_GROUND:
            raise ValueError(
                f'Search is limited to {MAX_SEARCH_GROUND} elements, got {self.fan.size}'
            )
        self.order = self.fan.facet_order()
        self.tangents = [self.fan.tangent(facet, mode) for facet in self.order]
        ambient = self.fan.ambient[mode]
        self.candidates = [
            sorted(tangent.complement_representatives(ambient)) for tangent in self.tangents
        ]
        position = {facet: k for k, facet in enumerate(self.order)}
        self.junctions: list[_Junction] = []
        self.touching: list[list[int]] = [[] for _ in self.order]
        for tau in self.fan.codim1_faces():
            shared = self.fan.tangent(tau, mode)
            members = []
            for sigma in self.fan.adjacent_facets(tau):
                k = position[sigma]
                (direction,) = self.tangents[k].quotient(shared).basis
                members.append((k, direction))
                self.touching[k].append(len(self.junctions))
            self.junctions.append(_Junction(shared, members))
        self.nodes = 0

    def _consistent(self, junction: _Junction, bases: list[int | None]) -> bool:
        assigned = [(k, d) for k, d in junction.members if bases[k] is not None]
        complete = len(assigned) == len(junction.members)
        holders: dict[int, list[int]] = {}
        for k, direction in assigned:
            start = junction.shared.reduce(bases[k])
            for point in (start, start ^ direction):
                holders.setdefault(point, []).append(k)
        counts = Counter(len(owners) for owners in holders.values())
        if any(size > 2 for size in counts):
            return False
        components = UnionFind(k for k, _ in assigned)
        for owners in holders.values():
            if len(owners) != 2:
                continue
            a, b = owners
            if not complete and components[a] == components[b]:
                return False
            components.union(a, b)
        if complete:
            return set(counts) == {2} and len(list(components.to_sets())) == 1
        return True

    def _structure(self, bases: list[int]) -> RealPhaseStructure:
        assignment = {
            facet: AffineSubspace(base, tangent)
            for facet, base, tangent in zip(self.order, bases, self.tangents)
        }
        return RealPhaseStructure(self.matroid, assignment, mode=self.mode, fan=self.fan)

    def run(self, up_to_reorientation: bool = False, limit: int | None = None) -> SearchResult:
        """
        Enumerate the structures.

        Parameters
        ----------
        up_to_reorientation : bool, optional
            Return one structure per reorientation class, by default False.
        limit : int, optional
            Stop after this many structures.

        Returns
        -------
        SearchResult
            The structures, flagged incomplete if the limit cut the search short.
        """
        result = SearchResult()
        total = len(self.order)
        if total == 0:
            return result
        bases: list[int | None] = [None] * total
        options = [list(c) for c in self.candidates]
        if up_to_reorientation:
            options[0] = [0]
        cursor = [0] * total
        depth = 0
        self.nodes = 0
        while depth >= 0:
            if cursor[depth] >= len(options[depth]):
                cursor[depth] = 0
                bases[depth] = None
                depth -= 1
                if depth >= 0:
                    cursor[depth] += 1
                continue
            bases[depth] = options[depth][cursor[depth]]
            self.nodes += 1
            if not all(self._consistent(self.junctions[j], bases) for j in self.touching[depth]):
                cursor[depth] += 1
                continue
            if depth + 1 < total:
                depth += 1
                continue
            structure = self._structure(list(bases))
            if not up_to_reorientation or not any(
                structure.equal_up_to_reorientation(kept) is not None
                for kept in result.structures
            ):
                if limit is not None and len(result) >= limit:
                    LOG.warning('Search stopped at the limit of %d structures', limit)
                    result.complete = False
                    break
                result.structures.append(structure)
            cursor[depth] += 1
        LOG.debug('Search visited %d nodes and found %d structures', self.nodes, len(result))
        return result


def search_phase_structures(
    matroid: Matroid,
    mode: Mode = 'affine',
    up_to_reorientation: bool = False,
    limit: int | None = None,
) -> SearchResult:
    """
    All real phase structures on the fan of a matroid.

    Parameters
    ----------
    matroid : Matroid
        The matroid; loops are contracted.
    mode : {'affine', 'projective'}, optional
        By default 'affine'.
    up_to_reorientation : bool, optional
        Return one structure per reorientation class, by default False.
    limit : int, optional
        Stop after this many structures.

    Returns
    -------
    SearchResult
        The structures in search order.
    """
    return PhaseStructureSearch(matroid, mode).run(up_to_reorientation, limit)
