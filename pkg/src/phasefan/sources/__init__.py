"""Sources that matroids are built from."""

from typing import Any, Mapping

from ..matroid import Matroid
from .graph import GraphSource
from .matrix import MatrixSource, parse_matrix
from .sets import BasisSource, CircuitSource
from .source import MatroidSource, RankTableSource

SOURCE_CLASSES: dict[str, type[MatroidSource]] = {
    source.kind: source
    for source in (RankTableSource, CircuitSource, BasisSource, GraphSource, MatrixSource)
}


def build_matroid(descriptor: Mapping[str, Any]) -> Matroid:
    """
    Build a matroid from a descriptor.

    Parameters
    ----------
    descriptor : Mapping[str, Any]
        A mapping with ``elements``, ``by`` (a key of ``SOURCE_CLASSES``) and ``data``.

    Returns
    -------
    Matroid
        The matroid, with its rank axioms checked.
    """
    kind = descriptor['by']
    if kind not in SOURCE_CLASSES:
        raise ValueError(f'Unknown matroid source {kind!r}, expected one of {sorted(SOURCE_CLASSES)}')
    return SOURCE_CLASSES[kind](descriptor['elements'], descriptor['data']).build()
