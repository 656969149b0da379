"""Matroids stored as full rank tables, with their lattices of flats and minors."""

import logging
from dataclasses import dataclass
from functools import cached_property, total_ordering
from typing import Iterable, Sequence

import sympy

from .gf2 import MAX_GROUND, expand
from .utils import LabelError, label_mask, mask_labels

LOG = logging.getLogger(__name__)

Subset = int | str | Iterable[str]


class MatroidAxiomError(ValueError):
    """
    A rank function violates one of the matroid rank axioms.

    Attributes
    ----------
    axiom : str
        The violated axiom.
    witness : tuple
        The subsets (as label tuples) exhibiting the violation.
    """

    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f'Rank axiom {axiom!r} fails at {witness}')


def _popcount(mask: int) -> int:
    return mask.bit_count()


def _positions(mask: int) -> list[int]:
    return [k for k in range(mask.bit_length()) if mask >> k & 1]


@dataclass(frozen=True)
class Flat:
    """
    A flat of a matroid.

    Attributes
    ----------
    elements : int
        The flat as a bitmask over the ground set.
    rank : int
        Its rank.
    """

    elements: int
    rank: int


@total_ordering
@dataclass(frozen=True, eq=True)
class ChainOfFlats:
    """
    A strictly increasing chain of flats, stored as bitmasks.

    Chains are ordered lexicographically by the sorted element positions of
    their flats, bottom first.
    """

    flats: tuple[int, ...]

    def __post_init__(self):
        for lower, upper in zip(self.flats, self.flats[1:]):
            if lower & ~upper or lower == upper:
                raise ValueError(f'Not a strictly increasing chain: {self.flats}')

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(_positions(flat)) for flat in self.flats)

    def __lt__(self, other: 'ChainOfFlats') -> bool:
        return self.key() < other.key()

    def __len__(self) -> int:
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)

    def contains(self, other: 'ChainOfFlats') -> bool:
        """Whether every flat of ``other`` appears in this chain."""
        return set(other.flats) <= set(self.flats)

    def without(self, flat: int) -> 'ChainOfFlats':
        return ChainOfFlats(tuple(f for f in self.flats if f != flat))

    def with_flat(self, flat: int) -> 'ChainOfFlats':
        return ChainOfFlats(tuple(sorted({*self.flats, flat}, key=_popcount)))


@dataclass(frozen=True)
class FlatLattice:
    """
    The lattice of flats of a matroid.

    Attributes
    ----------
    flats : tuple[Flat, ...]
        All flats, sorted by rank and then by elements.
    by_rank : tuple[tuple[int, ...], ...]
        Flat bitmasks grouped by rank.
    """

    flats: tuple[Flat, ...]
    by_rank: tuple[tuple[int, ...], ...]

    @cached_property
    def rank_of(self) -> dict[int, int]:
        return {flat.elements: flat.rank for flat in self.flats}

    @property
    def bottom(self) -> int:
        return self.by_rank[0][0]

    @property
    def top(self) -> int:
        return self.by_rank[-1][0]

    def __contains__(self, mask: int) -> bool:
        return mask in self.rank_of

    def covers(self, flat: int) -> tuple[int, ...]:
        """
        Flats covering ``flat``.

        Parameters
        ----------
        flat : int
            A flat of the lattice.

        Returns
        -------
        tuple[int, ...]
            The flats of rank one more that contain it.
        """
        rank = self.rank_of[flat]
        if rank + 1 >= len(self.by_rank):
            return ()
        return tuple(g for g in self.by_rank[rank + 1] if not flat & ~g)

    def interval(self, lower: int, upper: int) -> tuple[int, ...]:
        """Flats strictly between ``lower`` and ``upper``."""
        return tuple(
            f.elements
            for f in self.flats
            if not lower & ~f.elements
            and not f.elements & ~upper
            and f.elements not in (lower, upper)
        )

    def partitions_interval(self, lower: int, upper: int) -> bool:
        """
        Whether the flats covering ``lower`` inside ``upper`` partition the difference.

        Parameters
        ----------
        lower, upper : int
            Flats with ``lower`` contained in ``upper``.

        Returns
        -------
        bool
            True when the sets ``H - lower`` are disjoint with union ``upper - lower``.
        """
        seen = 0
        for flat in self.covers(lower):
            if flat & ~upper:
                continue
            piece = flat & ~lower
            if piece & seen:
                return False
            seen |= piece
        return seen == upper & ~lower

    def mobius(self) -> dict[int, int]:
        """Values of the Moebius function from the bottom flat."""
        values = {self.bottom: 1}
        for flat in self.flats[1:]:
            values[flat.elements] = -sum(
                value
                for lower, value in values.items()
                if not lower & ~flat.elements and lower != flat.elements
            )
        return values


class Matroid:
    """
    A matroid on an ordered ground set, given by its complete rank table.

    Attributes
    ----------
    ground : tuple[str, ...]
        The element labels; the position of a label is its bit in every mask.
    ranks : tuple[int, ...]
        ``ranks[mask]`` is the rank of the subset encoded by ``mask``.
    """

    def __init__(self, ground: Sequence[str], ranks: Sequence[int], validate: bool = True):
        """
        Initialize a matroid from a rank table.

        Parameters
        ----------
        ground : Sequence[str]
            The element labels.
        ranks : Sequence[int]
            A table of ``2 ** len(ground)`` ranks indexed by subset bitmask.
        validate : bool, optional
            Whether to check the rank axioms, by default True.

        Raises
        ------
        LabelError
            If labels repeat.
        MatroidAxiomError
            If the table is not a matroid rank function.
        """
        self.ground = tuple(str(label) for label in ground)
        if len(set(self.ground)) != len(self.ground):
            raise LabelError(f'Repeated labels in ground set {list(self.ground)}')
        if len(self.ground) > MAX_GROUND:
            raise ValueError(f'Ground sets are limited to {MAX_GROUND} elements')
        if len(ranks) != 1 << len(self.ground):
            raise ValueError(
                f'Rank table has {len(ranks)} entries, expected {1 << len(self.ground)}'
            )
        self.ranks = tuple(int(value) for value in ranks)
        self._index = {label: k for k, label in enumerate(self.ground)}
        if validate:
            self.check_axioms()

    def __repr__(self):
        return f'Matroid(rank={self.rank()}, ground={list(self.ground)})'

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and self.ranks == other.ranks

    def __hash__(self):
        return hash((self.ground, self.ranks))

    @property
    def size(self) -> int:
        return len(self.ground)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def mask(self, subset: Subset) -> int:
        """
        Convert a subset to a bitmask.

        Parameters
        ----------
        subset : int | str | Iterable[str]
            A bitmask, a single label or an iterable of labels.

        Returns
        -------
        int
            The bitmask.

        Raises
        ------
        LabelError
            If a label is not in the ground set.
        """
        return label_mask(self.ground, subset)

    def labels(self, subset: Subset) -> tuple[str, ...]:
        return mask_labels(self.ground, self.mask(subset))

    def index(self, label: str) -> int:
        return _positions(self.mask(label))[0]

    def rank(self, subset: Subset | None = None) -> int:
        """
        Rank of a subset, or of the whole matroid.

        Parameters
        ----------
        subset : int | str | Iterable[str], optional
            The subset, by default the ground set.

        Returns
        -------
        int
            The rank.
        """
        if subset is None:
            return self.ranks[self.full]
        return self.ranks[self.mask(subset)]

    def check_axioms(self) -> None:
        """
        Check the rank axioms on the whole table.

        Raises
        ------
        MatroidAxiomError
            With the first violated axiom and a witnessing pair of subsets.
        """
        ranks = self.ranks
        if ranks[0] != 0:
            raise MatroidAxiomError('rank of the empty set is 0', ((),))
        for mask in range(1 << self.size):
            base = ranks[mask]
            outside = [1 << k for k in range(self.size) if not mask >> k & 1]
            for x in outside:
                if ranks[mask | x] - base not in (0, 1):
                    raise MatroidAxiomError(
                        'unit increase', (self.labels(mask), self.labels(mask | x))
                    )
            for a, x in enumerate(outside):
                for y in outside[a + 1 :]:
                    if ranks[mask | x] + ranks[mask | y] < ranks[mask | x | y] + base:
                        raise MatroidAxiomError(
                            'submodularity', (self.labels(mask | x), self.labels(mask | y))
                        )

    def closure(self, subset: Subset) -> int:
        mask = self.mask(subset)
        rank = self.ranks[mask]
        for k in range(self.size):
            if self.ranks[mask | 1 << k] == rank:
                mask |= 1 << k
        return mask

    def is_flat(self, subset: Subset) -> bool:
        mask = self.mask(subset)
        return self.closure(mask) == mask

    def is_independent(self, subset: Subset) -> bool:
        mask = self.mask(subset)
        return self.ranks[mask] == _popcount(mask)

    @cached_property
    def loops(self) -> int:
        return self.closure(0)

    @cached_property
    def coloops(self) -> int:
        full_rank = self.rank()
        return sum(
            1 << k for k in range(self.size) if self.ranks[self.full & ~(1 << k)] < full_rank
        )

    def is_loop(self, label: str) -> bool:
        return bool(self.loops & self.mask(label))

    def is_coloop(self, label: str) -> bool:
        return bool(self.coloops & self.mask(label))

    def parallel_classes(self) -> list[int]:
        """Rank-one flats minus the loops, each as a bitmask."""
        return [flat & ~self.loops for flat in self.lattice().by_rank[1]] if self.rank() else []

    def bases(self) -> list[int]:
        full_rank = self.rank()
        return [
            mask
            for mask in range(1 << self.size)
            if _popcount(mask) == full_rank and self.ranks[mask] == full_rank
        ]

    def circuits(self) -> list[int]:
        """
        Minimal dependent sets.

        Returns
        -------
        list[int]
            Circuit bitmasks, sorted by size and then by value.
        """
        found = []
        for mask in range(1, 1 << self.size):
            size = _popcount(mask)
            if self.ranks[mask] != size - 1:
                continue
            if all(self.ranks[mask & ~(1 << k)] == size - 1 for k in _positions(mask)):
                found.append(mask)
        return sorted(found, key=lambda m: (_popcount(m), _positions(m)))

    def flats(self) -> list[Flat]:
        return list(self.lattice().flats)

    def lattice(self) -> FlatLattice:
        """
        The lattice of flats.

        Returns
        -------
        FlatLattice
            Flats grouped by rank with covering relations.
        """
        return self._lattice

    @cached_property
    def _lattice(self) -> FlatLattice:
        found = [
            Flat(mask, self.ranks[mask])
            for mask in range(1 << self.size)
            if self.closure(mask) == mask
        ]
        found.sort(key=lambda f: (f.rank, _positions(f.elements)))
        by_rank = [[] for _ in range(self.rank() + 1)]
        for flat in found:
            by_rank[flat.rank].append(flat.elements)
        LOG.debug('%r has %d flats', self, len(found))
        return FlatLattice(tuple(found), tuple(tuple(group) for group in by_rank))

    def minor(self, delete: Subset = 0, contract: Subset = 0) -> 'Matroid':
        """
        Delete and contract disjoint subsets.

        Parameters
        ----------
        delete : int | str | Iterable[str], optional
            Elements to delete.
        contract : int | str | Iterable[str], optional
            Elements to contract.

        Returns
        -------
        Matroid
            The minor on the remaining elements, in ground order.

        Raises
        ------
        ValueError
            If the two subsets overlap.
        """
        delete, contract = self.mask(delete), self.mask(contract)
        if delete & contract:
            raise ValueError(
                f'Cannot both delete and contract {list(self.labels(delete & contract))}'
            )
        keep = [k for k in range(self.size) if not (delete | contract) >> k & 1]
        base = self.ranks[contract]
        ranks = [
            self.ranks[expand(mask, keep) | contract] - base for mask in range(1 << len(keep))
        ]
        return Matroid([self.ground[k] for k in keep], ranks, validate=False)

    def delete(self, subset: Subset) -> 'Matroid':
        return self.minor(delete=subset)

    def contract(self, subset: Subset) -> 'Matroid':
        return self.minor(contract=subset)

    def reorder(self, labels: Sequence[str]) -> 'Matroid':
        """
        The same matroid with the ground set listed in another order.

        Parameters
        ----------
        labels : Sequence[str]
            A permutation of the ground set.

        Returns
        -------
        Matroid
            The reordered matroid.
        """
        labels = [str(label) for label in labels]
        if sorted(labels) != sorted(self.ground):
            raise LabelError(f'{labels} is not a permutation of {list(self.ground)}')
        positions = [self._index[label] for label in labels]
        ranks = [self.ranks[expand(mask, positions)] for mask in range(1 << self.size)]
        return Matroid(labels, ranks, validate=False)

    def relabel(self, labels: Sequence[str]) -> 'Matroid':
        return Matroid(labels, self.ranks, validate=False)

    def characteristic_polynomial(self) -> sympy.Poly:
        """
        The characteristic polynomial, by Moebius summation over the flats.

        Returns
        -------
        sympy.Poly
            An integer polynomial in ``t``; the zero polynomial when there are loops.
        """
        t = sympy.Symbol('t')
        if self.loops:
            LOG.warning(
                'Matroid has loops %s, its characteristic polynomial is 0',
                list(self.labels(self.loops)),
            )
            return sympy.Poly(0, t, domain='ZZ')
        lattice = self.lattice()
        full_rank = self.rank()
        expression = sum(
            value * t ** (full_rank - lattice.rank_of[flat])
            for flat, value in lattice.mobius().items()
        )
        return sympy.Poly(expression, t, domain='ZZ')

    def tope_count(self) -> int:
        """``|chi(-1)|``, the number of topes of any orientation."""
        return abs(int(self.characteristic_polynomial().eval(-1)))

    def chain_minor_sum(self, chain: ChainOfFlats) -> 'Matroid':
        """
        The direct sum of the minors ``M|F_i / F_(i-1)`` along a chain of flats.

        Parameters
        ----------
        chain : ChainOfFlats
            Flats of this matroid; the closure of the empty set and the ground set
            close the chain at both ends.

        Returns
        -------
        Matroid
            The sum on the non-loop elements, in ground order.
        """
        steps = [self.loops, *(f for f in chain.flats if f not in (self.loops, self.full)), self.full]
        for flat in steps:
            if not self.is_flat(flat):
                raise ValueError(f'{list(self.labels(flat))} is not a flat')
        parts = [
            self.minor(delete=self.full & ~upper, contract=lower)
            for lower, upper in zip(steps, steps[1:])
        ]
        total = direct_sum(parts)
        return total.reorder([label for label in self.ground if label in total.ground])

    def is_quotient(self, other: 'Matroid') -> bool:
        """
        Whether every flat of this matroid is a flat of ``other``.

        Parameters
        ----------
        other : Matroid
            A matroid on the same ground set.

        Returns
        -------
        bool
            True when this matroid is a quotient of ``other``.
        """
        if self.ground != other.ground:
            raise LabelError(f'Ground sets differ: {list(self.ground)} and {list(other.ground)}')
        return all(other.is_flat(flat.elements) for flat in self.flats())


def direct_sum(parts: Iterable[Matroid]) -> Matroid:
    """
    Direct sum of matroids on disjoint label sets.

    Parameters
    ----------
    parts : Iterable[Matroid]
        The summands.

    Returns
    -------
    Matroid
        The sum, with the ground sets concatenated in order.

    Raises
    ------
    LabelError
        If two summands share a label.
    """
    parts = list(parts)
    ground = [label for part in parts for label in part.ground]
    if len(set(ground)) != len(ground):
        raise LabelError(f'Summands share labels: {ground}')
    offsets, offset = [], 0
    for part in parts:
        offsets.append(offset)
        offset += part.size
    ranks = [
        sum(
            part.ranks[(mask >> start) & part.full]
            for part, start in zip(parts, offsets)
        )
        for mask in range(1 << len(ground))
    ]
    return Matroid(ground, ranks, validate=False)


def subset_mask(positions: Iterable[int]) -> int:
    return sum(1 << k for k in set(positions))
