"""Matroids given by a list of circuits or a list of bases."""

import logging

from ..matroid import Matroid, MatroidAxiomError
from .source import MatroidSource

LOG = logging.getLogger(__name__)


def _ranks_from_independence(independent: bytearray, size: int) -> list[int]:
    ranks = [0] * (1 << size)
    for mask in range(1, 1 << size):
        if independent[mask]:
            ranks[mask] = mask.bit_count()
        else:
            ranks[mask] = max(
                ranks[mask & ~(1 << k)] for k in range(size) if mask >> k & 1
            )
    return ranks


class CircuitSource(MatroidSource):
    """
    A matroid given by its circuits.

    ``data`` is a list of circuits, each a list of labels.
    """

    kind = 'circuits'

    def circuit_masks(self) -> list[int]:
        masks = sorted({self.label_mask(circuit) for circuit in self.data})
        if 0 in masks:
            raise ValueError('The empty set cannot be a circuit')
        for a in masks:
            for b in masks:
                if a != b and not a & ~b:
                    raise ValueError(
                        f'Circuits do not form a clutter: {self._names(a)} is inside {self._names(b)}'
                    )
        return masks

    def _names(self, mask: int) -> list[str]:
        return [label for k, label in enumerate(self.elements) if mask >> k & 1]

    def ranks(self) -> list[int]:
        circuits = set(self.circuit_masks())
        dependent = bytearray(1 << self.size)
        for mask in range(1, 1 << self.size):
            dependent[mask] = mask in circuits or any(
                dependent[mask & ~(1 << k)] for k in range(self.size) if mask >> k & 1
            )
        independent = bytearray(not flag for flag in dependent)
        return _ranks_from_independence(independent, self.size)

    def build(self) -> Matroid:
        matroid = super().build()
        expected = self.circuit_masks()
        if sorted(matroid.circuits()) != expected:
            extra = set(matroid.circuits()) ^ set(expected)
            raise MatroidAxiomError(
                'circuit elimination', tuple(matroid.labels(mask) for mask in sorted(extra))
            )
        return matroid


class BasisSource(MatroidSource):
    """
    A matroid given by its bases.

    ``data`` is a nonempty list of bases, each a list of labels.
    """

    kind = 'bases'

    def ranks(self) -> list[int]:
        if not self.data:
            raise ValueError('A matroid needs at least one basis')
        bases = {self.label_mask(basis) for basis in self.data}
        sizes = {basis.bit_count() for basis in bases}
        if len(sizes) > 1:
            raise MatroidAxiomError('equicardinal bases', tuple(sorted(sizes)))
        independent = bytearray(1 << self.size)
        for mask in range((1 << self.size) - 1, -1, -1):
            independent[mask] = mask in bases or any(
                independent[mask | 1 << k] for k in range(self.size) if not mask >> k & 1
            )
        return _ranks_from_independence(independent, self.size)

    def build(self) -> Matroid:
        matroid = super().build()
        expected = sorted({self.label_mask(basis) for basis in self.data})
        if matroid.bases() != expected:
            missing = sorted(set(matroid.bases()) - set(expected))
            LOG.debug('Basis exchange adds %d sets', len(missing))
            raise MatroidAxiomError(
                'basis exchange', tuple(matroid.labels(mask) for mask in missing)
            )
        return matroid
