"""Linear and affine algebra over Z/2 on coordinates indexed by a ground set.

Vectors are machine-word bitmasks: coordinate ``k`` of the ground set is bit
``1 << k``. Subspaces are kept in reduced row-echelon form with the pivot of a
row being its lowest set bit, so equal subspaces have equal representations.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import reduce
from typing import Hashable, Iterable, Iterator, Sequence

import networkx as nx

LOG = logging.getLogger(__name__)

MAX_GROUND = 16


class SizeMismatchError(ValueError):
    """Vectors or spaces living over different ground sizes were combined."""


class NecklaceError(ValueError):
    """The spaces given to the necklace check do not share a codimension-one tangent."""


def _check_sizes(*sizes: int) -> int:
    distinct = sorted(set(sizes))
    if len(distinct) > 1:
        raise SizeMismatchError(f'Ground sizes differ: {distinct}')
    return distinct[0]


def _lowest_bit(value: int) -> int:
    return value & -value


def _combine(rows: Sequence[int], selection: int) -> int:
    result = 0
    k = 0
    while selection:
        if selection & 1:
            result ^= rows[k]
        selection >>= 1
        k += 1
    return result


def compress(value: int, keep: Sequence[int]) -> int:
    """
    Restrict a bitmask to the given positions and renumber them from zero.

    Parameters
    ----------
    value : int
        The bitmask.
    keep : Sequence[int]
        The positions to keep, in their new order.

    Returns
    -------
    int
        The compressed bitmask.
    """
    result = 0
    for k, position in enumerate(keep):
        if value >> position & 1:
            result |= 1 << k
    return result


def expand(value: int, positions: Sequence[int]) -> int:
    """
    Inverse of ``compress``: send bit ``k`` to ``positions[k]``.

    Parameters
    ----------
    value : int
        The compressed bitmask.
    positions : Sequence[int]
        Target position of every bit.

    Returns
    -------
    int
        The expanded bitmask.
    """
    result = 0
    for k, position in enumerate(positions):
        if value >> k & 1:
            result |= 1 << position
    return result


@dataclass(frozen=True)
class BitVector:
    """
    An element of Z_2^E for a ground set of at most ``MAX_GROUND`` elements.

    Attributes
    ----------
    bits : int
        Bit ``k`` is the coordinate of the ``k``-th ground element.
    ground_size : int
        The size of the ground set.
    """

    bits: int
    ground_size: int

    def __post_init__(self):
        if not 0 <= self.ground_size <= MAX_GROUND:
            raise ValueError(f'Ground size {self.ground_size} outside 0..{MAX_GROUND}')
        if self.bits < 0 or self.bits >> self.ground_size:
            raise ValueError(
                f'Bits {self.bits:#x} set outside the low {self.ground_size} positions'
            )

    @classmethod
    def from_string(cls, value: str) -> 'BitVector':
        """
        Parse a 0/1 string indexed by the ground-set order.

        Parameters
        ----------
        value : str
            For example ``'010010'``.

        Returns
        -------
        BitVector
            The parsed vector.
        """
        if any(char not in '01' for char in value):
            raise ValueError(f'Not a 0/1 string: {value!r}')
        bits = sum(1 << k for k, char in enumerate(value) if char == '1')
        return cls(bits, len(value))

    @classmethod
    def zero(cls, ground_size: int) -> 'BitVector':
        return cls(0, ground_size)

    def to_string(self) -> str:
        return ''.join(str(self.bits >> k & 1) for k in range(self.ground_size))

    def __str__(self) -> str:
        return self.to_string()

    def __xor__(self, other: 'BitVector') -> 'BitVector':
        _check_sizes(self.ground_size, other.ground_size)
        return BitVector(self.bits ^ other.bits, self.ground_size)

    __add__ = __xor__

    def __getitem__(self, position: int) -> int:
        return self.bits >> position & 1

    def __iter__(self) -> Iterator[int]:
        for k in range(self.ground_size):
            yield self.bits >> k & 1

    def __len__(self) -> int:
        return self.ground_size

    def weight(self) -> int:
        return self.bits.bit_count()


def as_bits(value: 'BitVector | int', ground_size: int) -> int:
    """
    Return the bitmask of a vector, checking it fits the ground size.

    Parameters
    ----------
    value : BitVector | int
        The vector.
    ground_size : int
        The expected ground size.

    Returns
    -------
    int
        The bitmask.
    """
    if isinstance(value, BitVector):
        _check_sizes(value.ground_size, ground_size)
        return value.bits
    if value < 0 or value >> ground_size:
        raise SizeMismatchError(f'Vector {value:#x} does not fit {ground_size} coordinates')
    return value


def reduce_rows(vectors: Iterable[int]) -> tuple[int, ...]:
    """
    Bring vectors into reduced row-echelon form over Z/2.

    Parameters
    ----------
    vectors : Iterable[int]
        Generators, possibly dependent.

    Returns
    -------
    tuple[int, ...]
        Basis rows sorted by pivot, each pivot column clear in the other rows.
    """
    pivots: dict[int, int] = {}
    for vector in vectors:
        for pivot, row in pivots.items():
            if vector & pivot:
                vector ^= row
        if not vector:
            continue
        pivot = _lowest_bit(vector)
        for other, row in pivots.items():
            if row & pivot:
                pivots[other] = row ^ vector
        pivots[pivot] = vector
    return tuple(pivots[pivot] for pivot in sorted(pivots))


def _tagged_echelon(untagged: Iterable[int], tagged: Sequence[int]):
    # rows of ``tagged`` carry a tag bit so relations among them can be read back
    pivots: dict[int, tuple[int, int]] = {}
    relations: list[int] = []

    def insert(vector: int, tag: int) -> None:
        for pivot, (row, row_tag) in pivots.items():
            if vector & pivot:
                vector ^= row
                tag ^= row_tag
        if not vector:
            relations.append(tag)
            return
        pivot = _lowest_bit(vector)
        for other, (row, row_tag) in pivots.items():
            if row & pivot:
                pivots[other] = (row ^ vector, row_tag ^ tag)
        pivots[pivot] = (vector, tag)

    for vector in untagged:
        insert(vector, 0)
    for k, vector in enumerate(tagged):
        insert(vector, 1 << k)
    return pivots, relations


@dataclass(frozen=True)
class LinearSubspace:
    """
    A linear subspace of Z_2^E in reduced row-echelon form.

    Attributes
    ----------
    basis : tuple[int, ...]
        Rows with strictly increasing pivots (lowest set bit).
    ground_size : int
        The size of the ground set.
    """

    basis: tuple[int, ...]
    ground_size: int

    @classmethod
    def span(cls, generators: Iterable['BitVector | int'], ground_size: int) -> 'LinearSubspace':
        """
        Build the span of the generators.

        Parameters
        ----------
        generators : Iterable[BitVector | int]
            The generating vectors.
        ground_size : int
            The size of the ground set.

        Returns
        -------
        LinearSubspace
            The canonical span.
        """
        rows = reduce_rows(as_bits(vector, ground_size) for vector in generators)
        return cls(rows, ground_size)

    @classmethod
    def zero(cls, ground_size: int) -> 'LinearSubspace':
        return cls((), ground_size)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivot_mask(self) -> int:
        return reduce(lambda acc, row: acc | _lowest_bit(row), self.basis, 0)

    @property
    def rows(self) -> tuple[BitVector, ...]:
        return tuple(BitVector(row, self.ground_size) for row in self.basis)

    def reduce(self, vector: int) -> int:
        """Return the representative of ``vector`` modulo this subspace with zero pivots."""
        for row in self.basis:
            if vector & _lowest_bit(row):
                vector ^= row
        return vector

    def __contains__(self, vector: 'BitVector | int') -> bool:
        return self.reduce(as_bits(vector, self.ground_size)) == 0

    def vectors(self) -> Iterator[int]:
        for selection in range(1 << self.dim):
            yield _combine(self.basis, selection)

    def intersect(self, other: 'LinearSubspace') -> 'LinearSubspace':
        """
        Intersect two linear subspaces.

        Parameters
        ----------
        other : LinearSubspace
            The other subspace.

        Returns
        -------
        LinearSubspace
            The intersection.
        """
        _check_sizes(self.ground_size, other.ground_size)
        _, relations = _tagged_echelon(other.basis, self.basis)
        return LinearSubspace(
            reduce_rows(_combine(self.basis, tag) for tag in relations), self.ground_size
        )

    def quotient(self, shared: 'LinearSubspace') -> 'LinearSubspace':
        """Image in Z_2^E / ``shared``, written in coordinates reduced modulo ``shared``."""
        _check_sizes(self.ground_size, shared.ground_size)
        return LinearSubspace(
            reduce_rows(shared.reduce(row) for row in self.basis), self.ground_size
        )

    def complement_representatives(self, ambient: int | None = None) -> Iterator[int]:
        """
        Yield one canonical representative of every coset inside ``ambient``.

        Parameters
        ----------
        ambient : int, optional
            Mask of the coordinate subspace to enumerate, all coordinates by default.
            Every basis row must lie inside it.

        Yields
        ------
        int
            Vectors supported on the non-pivot coordinates of ``ambient``.
        """
        if ambient is None:
            ambient = (1 << self.ground_size) - 1
        free = [k for k in range(self.ground_size) if (ambient & ~self.pivot_mask) >> k & 1]
        for selection in range(1 << len(free)):
            yield expand(selection, free)


@dataclass(frozen=True)
class AffineSubspace:
    """
    An affine subspace ``base + tangent`` of Z_2^E in canonical form.

    The basepoint has zero coordinates at every pivot of the tangent basis, so
    two affine subspaces are equal as point sets exactly when they are equal as
    values.

    Attributes
    ----------
    base : int
        The canonical basepoint as a bitmask.
    tangent : LinearSubspace
        The direction space.
    """

    base: int
    tangent: LinearSubspace

    @classmethod
    def from_generators(
        cls, base: 'BitVector | int', generators: Iterable['BitVector | int'], ground_size: int
    ) -> 'AffineSubspace':
        tangent = LinearSubspace.span(generators, ground_size)
        return cls(tangent.reduce(as_bits(base, ground_size)), tangent)

    @classmethod
    def coset(cls, base: 'BitVector | int', tangent: LinearSubspace) -> 'AffineSubspace':
        return cls(tangent.reduce(as_bits(base, tangent.ground_size)), tangent)

    @property
    def ground_size(self) -> int:
        return self.tangent.ground_size

    @property
    def dim(self) -> int:
        return self.tangent.dim

    @property
    def basepoint(self) -> BitVector:
        return BitVector(self.base, self.ground_size)

    @property
    def basis(self) -> tuple[BitVector, ...]:
        return self.tangent.rows

    def points(self) -> Iterator[int]:
        for vector in self.tangent.vectors():
            yield self.base ^ vector

    def __len__(self) -> int:
        return 1 << self.dim

    def __contains__(self, vector: 'BitVector | int') -> bool:
        return self.contains(vector)

    def contains(self, vector: 'BitVector | int') -> bool:
        """
        Test membership of a point.

        Parameters
        ----------
        vector : BitVector | int
            The point.

        Returns
        -------
        bool
            Whether the point lies in the subspace.
        """
        bits = as_bits(vector, self.ground_size)
        return self.tangent.reduce(bits ^ self.base) == 0

    def translate(self, vector: 'BitVector | int') -> 'AffineSubspace':
        bits = as_bits(vector, self.ground_size)
        return AffineSubspace(self.tangent.reduce(self.base ^ bits), self.tangent)

    def intersect(self, other: 'AffineSubspace') -> 'AffineSubspace | None':
        """
        Intersect two affine subspaces.

        Parameters
        ----------
        other : AffineSubspace
            The other subspace.

        Returns
        -------
        AffineSubspace | None
            The canonical intersection, or None when the subspaces are disjoint.
        """
        _check_sizes(self.ground_size, other.ground_size)
        pivots, relations = _tagged_echelon(other.tangent.basis, self.tangent.basis)
        difference, tag = self.base ^ other.base, 0
        for pivot, (row, row_tag) in pivots.items():
            if difference & pivot:
                difference ^= row
                tag ^= row_tag
        if difference:
            return None
        rows = self.tangent.basis
        point = self.base ^ _combine(rows, tag)
        tangent = LinearSubspace(
            reduce_rows(_combine(rows, relation) for relation in relations), self.ground_size
        )
        return AffineSubspace.coset(point, tangent)

    def project(self, drop: 'BitVector | int') -> 'AffineSubspace':
        """
        Delete the coordinates in ``drop``.

        Parameters
        ----------
        drop : BitVector | int
            Mask of the coordinates to forget.

        Returns
        -------
        AffineSubspace
            The image in Z_2^(E minus drop), canonicalized.
        """
        drop = as_bits(drop, self.ground_size)
        keep = [k for k in range(self.ground_size) if not drop >> k & 1]
        return AffineSubspace.from_generators(
            compress(self.base, keep),
            (compress(row, keep) for row in self.tangent.basis),
            len(keep),
        )

    def quotient(self, shared: LinearSubspace) -> 'AffineSubspace':
        """Image in Z_2^E / ``shared``, written in coordinates reduced modulo ``shared``."""
        tangent = self.tangent.quotient(shared)
        return AffineSubspace.coset(shared.reduce(self.base), tangent)

    def __repr__(self) -> str:
        rows = ', '.join(str(row) for row in self.basis)
        return f'AffineSubspace({self.basepoint} + <{rows}>)'


def canonicalize(basepoint: BitVector, generators: Iterable[BitVector]) -> AffineSubspace:
    """
    Canonical form of ``basepoint + span(generators)``.

    Parameters
    ----------
    basepoint : BitVector
        Any point of the space.
    generators : Iterable[BitVector]
        Generators of the tangent space, possibly dependent.

    Returns
    -------
    AffineSubspace
        The canonical representation.
    """
    generators = list(generators)
    size = _check_sizes(basepoint.ground_size, *(vector.ground_size for vector in generators))
    return AffineSubspace.from_generators(basepoint, generators, size)


def affine_hull(points: Iterable['BitVector | int'], ground_size: int) -> AffineSubspace:
    """
    Smallest affine subspace containing the points.

    Parameters
    ----------
    points : Iterable[BitVector | int]
        A nonempty collection of points.
    ground_size : int
        The size of the ground set.

    Returns
    -------
    AffineSubspace
        The affine hull.
    """
    bits = [as_bits(point, ground_size) for point in points]
    if not bits:
        raise ValueError('The affine hull of no points is empty')
    offset = bits[0]
    return AffineSubspace.from_generators(offset, (b ^ offset for b in bits[1:]), ground_size)


def odd_points(spaces: Sequence[AffineSubspace]) -> list[int]:
    """
    Points covered an odd number of times.

    Parameters
    ----------
    spaces : Sequence[AffineSubspace]
        A nonempty family over a common ground size.

    Returns
    -------
    list[int]
        The offending points, sorted.
    """
    if not spaces:
        raise ValueError('An even covering needs at least one space')
    _check_sizes(*(space.ground_size for space in spaces))
    parity: dict[int, int] = defaultdict(int)
    for space in spaces:
        for point in space.points():
            parity[point] ^= 1
    return sorted(point for point, odd in parity.items() if odd)


def even_cover_check(spaces: Sequence[AffineSubspace]) -> bool:
    """
    Whether every point of the union lies in an even number of the spaces.

    Parameters
    ----------
    spaces : Sequence[AffineSubspace]
        A nonempty family over a common ground size.

    Returns
    -------
    bool
        True for an even covering.
    """
    return not odd_points(spaces)


@dataclass(frozen=True)
class NecklaceOrdering:
    """
    A cyclic order up to rotation and reversal.

    The stored representative starts at the smallest item and runs in the
    direction whose second entry is the smaller neighbour.

    Attributes
    ----------
    items : tuple
        The canonical representative.
    """

    items: tuple

    @classmethod
    def from_cycle(cls, cycle: Iterable[Hashable]) -> 'NecklaceOrdering':
        """
        Canonicalize a cyclic sequence.

        Parameters
        ----------
        cycle : Iterable[Hashable]
            Sortable, pairwise distinct items in cyclic order.

        Returns
        -------
        NecklaceOrdering
            The canonical necklace.
        """
        items = list(cycle)
        if len(set(items)) != len(items):
            raise ValueError(f'Repeated items in a necklace: {items}')
        if len(items) <= 2:
            return cls(tuple(sorted(items)))
        start = items.index(min(items))
        rotated = items[start:] + items[:start]
        if rotated[-1] < rotated[1]:
            rotated = [rotated[0]] + rotated[:0:-1]
        return cls(tuple(rotated))

    def relabel(self, labels: Sequence[Hashable]) -> 'NecklaceOrdering':
        return NecklaceOrdering.from_cycle(labels[item] for item in self.items)

    def neighbours(self, item: Hashable) -> set:
        k = self.items.index(item)
        return {self.items[k - 1], self.items[(k + 1) % len(self.items)]} - {item}

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def necklace_check(spaces: Sequence[AffineSubspace]) -> NecklaceOrdering | None:
    """
    Decide whether the spaces form a necklace arrangement.

    Two spaces form a necklace exactly when they are equal. Three or more must
    share a codimension-one tangent subspace; their images in the quotient are
    lines, and they form a necklace when the intersection complex of those lines
    is a single cycle through all of them.

    Parameters
    ----------
    spaces : Sequence[AffineSubspace]
        Spaces of a common dimension over a common ground size.

    Returns
    -------
    NecklaceOrdering | None
        The cyclic order of the positions in ``spaces``, or None.

    Raises
    ------
    NecklaceError
        If three or more spaces do not share a codimension-one tangent subspace.
    """
    spaces = list(spaces)
    if not spaces:
        raise ValueError('A necklace needs at least one space')
    _check_sizes(*(space.ground_size for space in spaces))
    if len(spaces) == 1:
        return None
    if len(spaces) == 2:
        return NecklaceOrdering((0, 1)) if spaces[0] == spaces[1] else None

    dims = {space.dim for space in spaces}
    if len(dims) > 1:
        raise NecklaceError(f'Spaces of different dimensions: {sorted(dims)}')
    shared = reduce(LinearSubspace.intersect, (space.tangent for space in spaces))
    if shared.dim != dims.pop() - 1:
        raise NecklaceError(
            f'{len(spaces)} spaces do not share a codimension-one tangent subspace'
        )

    owners: dict[int, list[int]] = defaultdict(list)
    for index, space in enumerate(spaces):
        for point in space.quotient(shared).points():
            owners[point].append(index)

    graph = nx.MultiGraph()
    graph.add_nodes_from(range(len(spaces)))
    for point, holders in owners.items():
        if len(holders) != 2:
            LOG.debug('Point %s is covered %d times', point, len(holders))
            return None
        graph.add_edge(*holders)
    if not nx.is_connected(graph):
        return None
    cycle = [edge[0] for edge in nx.find_cycle(graph, source=0)]
    return NecklaceOrdering.from_cycle(cycle)
