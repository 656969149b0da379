"""Column matroids of exact rational matrices."""

from typing import Sequence

import sympy

from .source import MatroidSource


def parse_matrix(rows: Sequence[Sequence[int | str]]) -> sympy.Matrix:
    """
    Parse a matrix of exact rational entries.

    Parameters
    ----------
    rows : Sequence[Sequence[int | str]]
        Rows of integers or strings such as ``'3/4'``.

    Returns
    -------
    sympy.Matrix
        The matrix over the rationals.
    """
    if not rows:
        raise ValueError('A matrix needs at least one row')
    width = {len(row) for row in rows}
    if len(width) != 1:
        raise ValueError(f'Ragged matrix with row lengths {sorted(width)}')
    entries = []
    for row in rows:
        parsed = []
        for value in row:
            if isinstance(value, float):
                raise ValueError(f'Inexact entry {value!r}, write it as a fraction')
            parsed.append(sympy.Rational(str(value)))
        entries.append(parsed)
    return sympy.Matrix(entries)


class MatrixSource(MatroidSource):
    """
    The matroid of the columns of a rational matrix.

    ``data`` is the list of rows; column ``k`` belongs to element ``k``.
    """

    kind = 'matrix'

    def matrix(self) -> sympy.Matrix:
        matrix = parse_matrix(self.data)
        if matrix.cols != self.size:
            raise ValueError(f'{matrix.cols} columns given for {self.size} elements')
        return matrix

    def ranks(self) -> list[int]:
        matrix = self.matrix()
        rows = list(range(matrix.rows))
        ranks = [0]
        for mask in range(1, 1 << self.size):
            columns = [k for k in range(self.size) if mask >> k & 1]
            ranks.append(matrix.extract(rows, columns).rank())
        return ranks
