"""Enumeration of the orientations of small matroids by signing their circuits."""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator

from .matroid import Matroid
from .oriented import (
    InvalidOrientedMatroidError,
    OrientedMatroid,
    SignedCircuitSet,
    SignVector,
)

LOG = logging.getLogger(__name__)

MAX_ORIENTATION_GROUND = 8


class SizeCapError(ValueError):
    """The matroid is too large for exhaustive orientation search."""


@dataclass(frozen=True)
class _EliminationCheck:
    first: int
    second: int
    element: int
    witnesses: tuple[int, ...]


def _sign_options(circuit: int, size: int) -> list[SignVector]:
    # one representative per +/- pair: positive on the first element
    elements = [k for k in range(size) if circuit >> k & 1]
    first, rest = elements[0], elements[1:]
    options = []
    for signs in itertools.product((1, -1), repeat=len(rest)):
        minus = sum(1 << k for k, s in zip(rest, signs) if s < 0)
        options.append(SignVector(circuit & ~minus, minus, size))
    return options if rest else [SignVector(1 << first, 0, size)]


class OrientationSearch:
    """
    Backtracking over sign choices for the circuits of a matroid.

    A partial choice is abandoned as soon as the weak elimination axiom fails on
    two chosen circuits whose eliminations all lie among the chosen ones.

    Attributes
    ----------
    matroid : Matroid
        The matroid to orient.
    circuits : list[int]
        Circuit bitmasks in search order.
    """

    def __init__(self, matroid: Matroid):
        if matroid.size > MAX_ORIENTATION_GROUND:
            raise SizeCapError(
                f'Orientation search is limited to {MAX_ORIENTATION_GROUND} elements, got {matroid.size}'
            )
        self.matroid = matroid
        size = matroid.size
        self.circuits = sorted(
            matroid.circuits(), key=lambda c: (c.bit_length(), c.bit_count(), c)
        )
        self.options = [_sign_options(circuit, size) for circuit in self.circuits]
        self.checks: list[list[_EliminationCheck]] = [[] for _ in self.circuits]
        for a, b in itertools.combinations(range(len(self.circuits)), 2):
            union = self.circuits[a] | self.circuits[b]
            common = self.circuits[a] & self.circuits[b]
            for e in range(size):
                if not common >> e & 1:
                    continue
                region = union & ~(1 << e)
                witnesses = tuple(
                    k for k, c in enumerate(self.circuits) if not c & ~region
                )
                trigger = max(a, b, *witnesses)
                self.checks[trigger].append(_EliminationCheck(a, b, e, witnesses))
        self.nodes = 0

    def _eliminates(self, check: _EliminationCheck, chosen: list[SignVector]) -> bool:
        x, y, bit = chosen[check.first], chosen[check.second], 1 << check.element
        if not x.plus & bit:
            x = -x
        if not y.minus & bit:
            y = -y
        plus = (x.plus | y.plus) & ~bit
        minus = (x.minus | y.minus) & ~bit
        for k in check.witnesses:
            z = chosen[k]
            if not z.plus & ~plus and not z.minus & ~minus:
                return True
            if not z.minus & ~plus and not z.plus & ~minus:
                return True
        return False

    def signed_circuit_sets(self) -> Iterator[SignedCircuitSet]:
        """
        Yield every sign choice passing the elimination checks.

        Yields
        ------
        SignedCircuitSet
            One candidate orientation.
        """
        chosen: list[SignVector] = []
        self.nodes = 0

        def extend(depth: int) -> Iterator[SignedCircuitSet]:
            if depth == len(self.circuits):
                yield SignedCircuitSet.from_vectors(self.matroid.ground, chosen)
                return
            for option in self.options[depth]:
                self.nodes += 1
                chosen.append(option)
                if all(self._eliminates(check, chosen) for check in self.checks[depth]):
                    yield from extend(depth + 1)
                chosen.pop()

        yield from extend(0)


def iter_orientations(matroid: Matroid) -> Iterator[OrientedMatroid]:
    """
    Every oriented matroid with the given underlying matroid.

    Parameters
    ----------
    matroid : Matroid
        A matroid on at most ``MAX_ORIENTATION_GROUND`` elements.

    Yields
    ------
    OrientedMatroid
        Each orientation once, validated through its signed circuits.
    """
    search = OrientationSearch(matroid)
    for candidate in search.signed_circuit_sets():
        try:
            oriented = OrientedMatroid.from_signed_circuits(candidate)
        except InvalidOrientedMatroidError as error:
            LOG.debug('Rejected candidate %s: %s', candidate.to_strings(), error)
            continue
        yield oriented
    LOG.debug('Orientation search visited %d nodes', search.nodes)


def count_orientations(matroid: Matroid) -> int:
    """
    Count the orientations of a matroid.

    Parameters
    ----------
    matroid : Matroid
        A matroid on at most ``MAX_ORIENTATION_GROUND`` elements.

    Returns
    -------
    int
        The number of oriented matroids on it; 0 when it is not orientable.
    """
    return sum(1 for _ in iter_orientations(matroid))


def find_extension(
    matroid: Matroid,
    label: str,
    deletion: OrientedMatroid,
    contraction: OrientedMatroid,
) -> OrientedMatroid | None:
    """
    Search for an orientation with a prescribed deletion and contraction of one element.

    Parameters
    ----------
    matroid : Matroid
        The underlying matroid of the orientation sought.
    label : str
        The element.
    deletion : OrientedMatroid
        The required deletion of ``label``.
    contraction : OrientedMatroid
        The required contraction of ``label``.

    Returns
    -------
    OrientedMatroid | None
        The first orientation found, or None.
    """
    for oriented in iter_orientations(matroid):
        if oriented.minor(delete=label) == deletion and oriented.minor(contract=label) == contraction:
            return oriented
    return None
