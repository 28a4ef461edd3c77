"""Small dense linear algebra over the rationals.

Matrices are lists of rows; entries may be ints or Fractions. Everything is
exact, sizes here never exceed a few dozen rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

Matrix = List[List[Fraction]]


def to_fraction_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def row_echelon(rows: Sequence[Sequence[int]]) -> tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    m = to_fraction_matrix(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    return len(row_echelon(rows)[1])


def solve(columns: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[List[Fraction]]:
    """Coefficients x with sum_i x_i * columns[i] == target, or None.

    ``columns`` must be linearly independent.
    """
    k = len(columns)
    dim = len(target)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(dim)]
    red, pivots = row_echelon(aug)
    if k in pivots:
        return None
    if len(pivots) != k:
        raise ValueError("columns are linearly dependent")
    x = [Fraction(0)] * k
    for row, c in zip(red, pivots):
        x[c] = row[k]
    return x


def inverse(square: Sequence[Sequence[int]]) -> Matrix:
    n = len(square)
    aug = [list(square[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    red, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


def in_span(vectors: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    if not vectors:
        return all(x == 0 for x in v)
    return rank(list(vectors) + [list(v)]) == rank(vectors)
