"""Exact walk matrices and the relations between them.

The k-walk matrix has columns j, Aj, ..., A^(k-1) j.  Its rank stops growing
at p, the number of main eigenvalues, and ``main_polynomial`` is the monic
recurrence A^p j = c_(p-1) A^(p-1) j + ... + c_0 j read off from that point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ConsistencyError, DimensionError
from .exact import column_space_equal, int_rank, solve_rational
from .graph import Graph, _bits

Rows = tuple[tuple[int, ...], ...]


def apply_adjacency(g: Graph, x: list[int]) -> list[int]:
    return [sum(x[u] for u in _bits(g.adj[v])) for v in range(g.n)]


def walk_columns(g: Graph, k: int) -> list[list[int]]:
    """The vectors A^i j for i = 0..k-1."""
    cols = []
    x = [1] * g.n
    for _ in range(k):
        cols.append(x)
        x = apply_adjacency(g, x)
    return cols


def _rows(cols: list[list[int]], n: int) -> Rows:
    return tuple(tuple(c[v] for c in cols) for v in range(n))


def walk_matrix_k(g: Graph, k: int) -> Rows:
    """n x k integer walk matrix as a tuple of rows."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return _rows(walk_columns(g, k), g.n)


@lru_cache(maxsize=None)
def main_count(g: Graph) -> int:
    """p = rank of the n-walk matrix."""
    if g.n == 0:
        return 0
    return int_rank(walk_matrix_k(g, g.n))


def walk_matrix(g: Graph) -> Rows:
    return walk_matrix_k(g, main_count(g)) if g.n else ()


@lru_cache(maxsize=None)
def recurrence_coefficients(g: Graph) -> tuple[int, ...]:
    """(c_0, ..., c_(p-1)) with A^p j = sum_i c_i A^i j."""
    p = main_count(g)
    if p == 0:
        return ()
    cols = walk_columns(g, p + 1)
    coeffs = solve_rational(_rows(cols[:p], g.n), cols[p])
    if coeffs is None:
        raise ConsistencyError(f"A^{p} j is outside the span of the first {p} walk columns")
    if any(c.denominator != 1 for c in coeffs):
        raise ConsistencyError(f"non-integral main polynomial coefficients {coeffs}")
    return tuple(int(c) for c in coeffs)


def main_polynomial(g: Graph) -> tuple[int, ...]:
    """Monic main characteristic polynomial, coefficients highest degree first."""
    coeffs = recurrence_coefficients(g)
    return (1,) + tuple(-c for c in reversed(coeffs))


def format_polynomial(coeffs, var: str = "x") -> str:
    deg = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        e = deg - i
        if c == 0:
            continue
        mag = abs(c)
        body = var if e == 1 else f"{var}^{e}" if e else ""
        if body and mag == 1:
            text = body
        else:
            text = f"{mag}{body}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, text))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in terms[1:]:
        out += f" {sign} {text}"
    return out


def evaluate_polynomial(coeffs, x):
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


# ----------------------------------------------------------- relations


def same_walk_matrix(g: Graph, h: Graph) -> bool:
    """Entrywise equality of W_G(p) and W_H(p) under the given labelling."""
    return g.n == h.n and main_count(g) == main_count(h) and walk_matrix(g) == walk_matrix(h)


def same_walk_matrices_all_k(g: Graph, h: Graph) -> bool:
    # Equality of the first p+1 columns fixes the recurrence (W(p) has full
    # column rank, so its coefficients are unique), and the recurrence then
    # produces every later column identically.
    if g.n != h.n:
        return False
    k = max(main_count(g), main_count(h)) + 1
    return walk_matrix_k(g, k) == walk_matrix_k(h, k)


def related_walk_matrices(g: Graph, h: Graph) -> list[list[Fraction]] | None:
    """The p x p matrix Q with W_G Q = W_H, or None if the column spaces differ."""
    if g.n != h.n:
        raise DimensionError(f"orders differ: {g.n} vs {h.n}")
    wg, wh = walk_matrix(g), walk_matrix(h)
    p = main_count(g)
    if p != main_count(h) or not column_space_equal(wg, wh):
        return None
    q_cols = []
    for c in range(p):
        col = solve_rational(wg, [row[c] for row in wh])
        if col is None:
            raise ConsistencyError("column of W_H outside equal column space")
        q_cols.append(col)
    return [[q_cols[c][r] for c in range(p)] for r in range(p)]


def main_eigenspace_equal(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        raise DimensionError(f"orders differ: {g.n} vs {h.n}")
    if g.n == 0:
        return True
    return column_space_equal(walk_matrix(g), walk_matrix(h))


def row_matching(g: Graph, h: Graph, k: int) -> list[int] | None:
    """A vertex order making W_G(k) rows equal W_H(k) rows, if one exists.

    Returned list ``order`` satisfies ``walk_matrix_k(g.permute(order), k) ==
    walk_matrix_k(h, k)``.
    """
    if g.n != h.n:
        return None
    wg, wh = walk_matrix_k(g, k), walk_matrix_k(h, k)
    if sorted(wg) != sorted(wh):
        return None
    pool: dict[tuple[int, ...], list[int]] = {}
    for v, row in enumerate(wg):
        pool.setdefault(row, []).append(v)
    return [pool[row].pop(0) for row in wh]
