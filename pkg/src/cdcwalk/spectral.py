"""Floating-point spectra, main eigenvalues and principal main eigenvectors.

Eigenpairs come from a cyclic Jacobi solver.  Every float-side
classification is cross-checked against the exact walk-matrix rank so a
misjudged threshold fails loudly instead of silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np

from .errors import NumericFailure, ToleranceFailure
from .graph import Graph
from .walks import (
    apply_adjacency,
    evaluate_polynomial,
    main_count,
    main_polynomial,
)

JACOBI_TOL = 1e-12
JACOBI_SWEEPS = 100
GROUP_TOL = 1e-7
MAIN_TOL = 1e-8
VECTOR_TOL = 1e-6


@dataclass(frozen=True)
class EigenGroup:
    value: float
    multiplicity: int
    basis: np.ndarray  # n x multiplicity, orthonormal columns


@dataclass(frozen=True)
class Spectrum:
    groups: tuple[EigenGroup, ...]

    def eigenvalues(self) -> list[float]:
        """Full multiset, ascending."""
        return [grp.value for grp in self.groups for _ in range(grp.multiplicity)]


@dataclass(frozen=True)
class MainEigen:
    value: float
    vector: np.ndarray  # P_i j
    weight: float  # ||P_i j||^2


@dataclass(frozen=True)
class MainDecomposition:
    p: int
    mains: tuple[MainEigen, ...]
    main_poly: tuple[int, ...]
    projections: tuple[np.ndarray, ...]  # P_i j for every spectral group

    @property
    def values(self) -> list[float]:
        return [m.value for m in self.mains]


def jacobi_eigh(a, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_SWEEPS):
    """Eigenvalues and eigenvectors of a real symmetric matrix by cyclic Jacobi.

    Returns ``(values, vectors)`` with eigenvectors as columns, unsorted.
    Raises NumericFailure when the off-diagonal norm does not drop below
    ``tol * ||a||_F`` within ``max_sweeps`` sweeps.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    scale = np.linalg.norm(a)
    if n < 2 or scale == 0.0:
        return np.diag(a).copy(), v
    target = tol * scale
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off < target:
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-18 * scale:
                    a[p, q] = a[q, p] = 0.0
                    continue
                h = a[q, q] - a[p, p]
                if abs(apq) < 1e-18 * abs(h):
                    t = apq / h  # theta^2 would overflow; t ~ 1 / (2 theta)
                else:
                    theta = h / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    raise NumericFailure(f"Jacobi did not converge in {max_sweeps} sweeps", matrix=a)


@lru_cache(maxsize=None)
def spectrum(g: Graph) -> Spectrum:
    if g.n < 1:
        raise ValueError("spectrum needs at least one vertex")
    values, vectors = jacobi_eigh(g.adjacency_matrix())
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]
    groups = []
    start = 0
    for i in range(1, g.n + 1):
        if i == g.n or values[i] - values[i - 1] >= GROUP_TOL:
            block = values[start:i]
            groups.append(EigenGroup(float(np.mean(block)), i - start, vectors[:, start:i]))
            start = i
    return Spectrum(tuple(groups))


@lru_cache(maxsize=None)
def main_decomposition(g: Graph) -> MainDecomposition:
    spec = spectrum(g)
    j = np.ones(g.n)
    threshold = MAIN_TOL * g.n
    projections = []
    mains = []
    for grp in spec.groups:
        coeffs = grp.basis.T @ j
        proj = grp.basis @ coeffs
        projections.append(proj)
        weight = float(proj @ proj)
        if weight > threshold:
            mains.append(MainEigen(grp.value, proj, weight))

    p_exact = main_count(g)
    poly = main_polynomial(g)
    diagnostics = {
        "graph": repr(g),
        "eigenvalues": [grp.value for grp in spec.groups],
        "weights": [float(pr @ pr) for pr in projections],
        "exact_p": p_exact,
    }
    if len(mains) != p_exact:
        raise ToleranceFailure(f"float main count {len(mains)} != exact rank {p_exact}", diagnostics)
    for m in mains:
        residual = evaluate_polynomial(poly, m.value)
        scale = evaluate_polynomial([abs(c) for c in poly], abs(m.value))
        if abs(residual) >= VECTOR_TOL * max(1.0, scale):
            raise ToleranceFailure(
                f"main polynomial does not vanish at {m.value}: {residual}", diagnostics
            )
    return MainDecomposition(p_exact, tuple(mains), poly, tuple(projections))


def comain(g: Graph, h: Graph) -> bool:
    return main_polynomial(g) == main_polynomial(h)


def same_principal_main_vectors(g: Graph, h: Graph, tol: float = VECTOR_TOL) -> bool:
    if g.n != h.n:
        return False
    dg, dh = main_decomposition(g), main_decomposition(h)
    if dg.p != dh.p:
        return False
    # P_i j are mutually orthogonal and nonzero, so at most one partner can
    # lie within tol of each vector: greedy pairing is the optimal pairing.
    unused = list(dh.mains)
    for m in dg.mains:
        hit = next((k for k, o in enumerate(unused) if np.max(np.abs(m.vector - o.vector)) < tol), None)
        if hit is None:
            return False
        unused.pop(hit)
    return True


def walk_count_total(g: Graph, k: int) -> int:
    """Total number of walks of length k (sum of the entries of A^k j)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    x = [1] * g.n
    for _ in range(k):
        x = apply_adjacency(g, x)
    return sum(x)
