"""Utility functions for labels, subsets and error locations."""

from typing import Iterable, Sequence


class LabelError(ValueError):
    """Unknown, repeated or colliding element labels."""


def label_mask(ground: Sequence[str], subset: int | str | Iterable[str]) -> int:
    """
    Convert a subset of the ground set to a bitmask.

    Parameters
    ----------
    ground : Sequence[str]
        The element labels in order.
    subset : int | str | Iterable[str]
        A bitmask, a single label or an iterable of labels.

    Returns
    -------
    int
        The bitmask.

    Raises
    ------
    LabelError
        If a label is unknown or the bitmask does not fit the ground set.
    """
    if isinstance(subset, int):
        if subset < 0 or subset >> len(ground):
            raise LabelError(f'Mask {subset:#x} outside the ground set')
        return subset
    if isinstance(subset, str):
        subset = [subset]
    index = {label: k for k, label in enumerate(ground)}
    bits = 0
    for label in subset:
        try:
            bits |= 1 << index[str(label)]
        except KeyError:
            raise LabelError(f'Unknown element {label!r}, ground set is {list(ground)}') from None
    return bits


def mask_labels(ground: Sequence[str], mask: int) -> tuple[str, ...]:
    """The labels of the elements in a bitmask, in ground order."""
    return tuple(label for k, label in enumerate(ground) if mask >> k & 1)


def validate_labels(labels: Iterable) -> list[str]:
    """
    Normalize element labels to distinct strings.

    Parameters
    ----------
    labels : Iterable
        Labels as read from a document; integers are accepted.

    Returns
    -------
    list[str]
        The labels as strings.
    """
    result = [str(label).strip() for label in labels]
    if any(not label for label in result):
        raise LabelError('Empty element label')
    if len(set(result)) != len(result):
        repeated = sorted({label for label in result if result.count(label) > 1})
        raise LabelError(f'Repeated labels: {repeated}')
    return result


def json_pointer(location: Iterable[str | int]) -> str:
    """
    Build an RFC 6901 JSON pointer from a validation error location.

    Parameters
    ----------
    location : Iterable[str | int]
        The path, as in the ``loc`` of a pydantic error.

    Returns
    -------
    str
        For example ``'/facets/0/space/basepoint'``.
    """
    parts = [str(part).replace('~', '~0').replace('/', '~1') for part in location]
    return ''.join(f'/{part}' for part in parts)
