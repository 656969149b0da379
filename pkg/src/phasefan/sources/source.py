"""Base class for the descriptions a matroid can be built from."""

from typing import Any, Sequence

from ..matroid import Matroid
from ..utils import label_mask


class MatroidSource:
    """
    Base class for matroid sources.

    Attributes
    ----------
    elements : list[str]
        The ground-set labels, in order.
    data : Any
        The kind-specific payload of the descriptor.
    """

    kind = ''

    def __init__(self, elements: Sequence[str], data: Any):
        self.elements = [str(label) for label in elements]
        self.data = data

    def __repr__(self):
        return f'{self.__class__.__name__}(elements={self.elements})'

    @property
    def size(self) -> int:
        return len(self.elements)

    def label_mask(self, labels: Sequence[str]) -> int:
        """
        Bitmask of a list of labels.

        Parameters
        ----------
        labels : Sequence[str]
            Labels from ``elements``.

        Returns
        -------
        int
            The bitmask.

        Raises
        ------
        LabelError
            If a label is not in ``elements``.
        """
        return label_mask(self.elements, [str(label) for label in labels])

    def ranks(self) -> list[int]:
        """
        Compute the rank table.

        Returns
        -------
        list[int]
            Ranks indexed by subset bitmask.
        """
        raise NotImplementedError

    def build(self) -> Matroid:
        """
        Build the matroid, checking the rank axioms.

        Returns
        -------
        Matroid
            The matroid described by this source.
        """
        return Matroid(self.elements, self.ranks())


class RankTableSource(MatroidSource):
    """A matroid given directly by its rank table."""

    kind = 'rank_table'

    def ranks(self) -> list[int]:
        return [int(value) for value in self.data]
