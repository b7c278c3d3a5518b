"""Exact integer/rational linear algebra.

Matrices are plain row sequences of Python ints; rational results are
``fractions.Fraction``.  Everything here is fraction-free (Bareiss) so the
intermediate entries stay integral.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, RankDeficient

IntMatrix = Sequence[Sequence[int]]


def _shape(m: IntMatrix) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise DimensionError("ragged matrix")
    return rows, cols


def bareiss_echelon(m: IntMatrix) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the reduced working copy and the pivot column of each nonzero
    row.  Every division is exact: after each step the entries are minors
    of the input.
    """
    rows, cols = _shape(m)
    a = [list(r) for r in m]
    pivots = []
    prev = 1
    r0 = 0
    for c in range(cols):
        if r0 == rows:
            break
        piv = next((r for r in range(r0, rows) if a[r][c]), None)
        if piv is None:
            continue
        if piv != r0:
            a[r0], a[piv] = a[piv], a[r0]
        top = a[r0]
        p = top[c]
        for r in range(r0 + 1, rows):
            row = a[r]
            f = row[c]
            for cc in range(c + 1, cols):
                num = p * row[cc] - f * top[cc]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division not exact"
                row[cc] = q
            row[c] = 0
        prev = p
        pivots.append(c)
        r0 += 1
    return a, pivots


def int_rank(m: IntMatrix) -> int:
    """Rank over the rationals."""
    if not len(m):
        return 0
    return len(bareiss_echelon(m)[1])


def hstack(*mats: IntMatrix) -> list[list[int]]:
    rows = {len(m) for m in mats}
    if len(rows) != 1:
        raise DimensionError(f"row counts differ: {sorted(rows)}")
    return [sum((list(m[i]) for m in mats), []) for i in range(rows.pop())]


def solve_rational(a: IntMatrix, b: Sequence[int]) -> list[Fraction] | None:
    """Solve ``a x = b`` for a full-column-rank ``a``.

    Returns None when ``b`` is not in the column space.
    """
    rows, cols = _shape(a)
    if len(b) != rows:
        raise DimensionError(f"right-hand side has {len(b)} entries, matrix has {rows} rows")
    aug = [list(a[i]) + [b[i]] for i in range(rows)]
    ech, pivots = bareiss_echelon(aug)
    if pivots[:cols] != list(range(cols)):
        raise RankDeficient(f"coefficient matrix has rank < {cols}")
    if len(pivots) > cols:
        return None
    x = [Fraction(0)] * cols
    for i in range(cols - 1, -1, -1):
        row = ech[i]
        s = Fraction(row[cols]) - sum(row[k] * x[k] for k in range(i + 1, cols))
        x[i] = s / row[i]
    return x


def column_space_equal(m1: IntMatrix, m2: IntMatrix) -> bool:
    if len(m1) != len(m2):
        raise DimensionError(f"row counts differ: {len(m1)} vs {len(m2)}")
    r1 = int_rank(m1)
    r2 = int_rank(m2)
    return r1 == r2 and int_rank(hstack(m1, m2)) == r1


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    inner = len(b)
    if a and len(a[0]) != inner:
        raise DimensionError("inner dimensions differ")
    cols = len(b[0]) if inner else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]
