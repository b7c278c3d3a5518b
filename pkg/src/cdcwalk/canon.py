"""Canonical labelling, isomorphism and TF-isomorphism for small graphs.

Canonical forms use colour refinement followed by an individualise-refine
search that keeps the smallest leaf code.  Automorphisms discovered at
leaves prune the search two ways: sibling branches in the same orbit of the
pointwise stabiliser of the current path are skipped, and a leaf equivalent
to the first or best leaf sends the search straight back to the node where
the two paths diverge.  Connected components are canonised separately and
concatenated in sorted order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .cover import cdc
from .errors import ConsistencyError, DimensionError, UnsupportedSize
from .graph import Graph, _bits, components, write_graph6

MAX_CANON_ORDER = 20


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    """Iterate colour refinement to a stable (equitable) partition.

    Colours are contiguous ranks; cells only ever split in place, so the
    cell order stays a function of the previous order and the structure.
    """
    ncells = max(colors) + 1
    m = len(colors)
    while ncells < m:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in nbrs[v]]))) for v in range(m)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        if len(ranks) == ncells:
            break
        colors = [ranks[s] for s in sigs]
        ncells = len(ranks)
    return colors


def _individualise(colors: list[int], w: int) -> list[int]:
    c = colors[w]
    return [x + 1 if x > c or (x == c and v != w) else x for v, x in enumerate(colors)]


class _Search:
    def __init__(self, g: Graph):
        self.m = g.n
        self.nbrs = [list(_bits(row)) for row in g.adj]
        self.first = None  # (code, lab, path)
        self.best = None
        self.autos: list[list[int]] = []

    def _code(self, lab: list[int]) -> tuple[int, ...]:
        inv = [0] * self.m
        for v, pos in enumerate(lab):
            inv[pos] = v
        rows = []
        for v in inv:
            row = 0
            for u in self.nbrs[v]:
                row |= 1 << lab[u]
            rows.append(row)
        return tuple(rows)

    def _automorphism(self, lab_from: list[int], lab_to: list[int]) -> list[int]:
        inv_to = [0] * self.m
        for v, pos in enumerate(lab_to):
            inv_to[pos] = v
        return [inv_to[lab_from[v]] for v in range(self.m)]

    @staticmethod
    def _common(a: list[int], b: list[int]) -> int:
        k = 0
        while k < len(a) and k < len(b) and a[k] == b[k]:
            k += 1
        return k

    def _leaf(self, lab: list[int], path: list[int]) -> int | None:
        code = self._code(lab)
        if self.first is None:
            self.first = self.best = (code, lab, path)
            return None
        for ref_code, ref_lab, ref_path in (self.first, self.best):
            if code == ref_code:
                self.autos.append(self._automorphism(ref_lab, lab))
                return self._common(ref_path, path)
        if code < self.best[0]:
            self.best = (code, lab, path)
        return None

    def _same_orbit(self, w: int, tried: list[int], path: list[int]) -> bool:
        parent = list(range(self.m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if all(gamma[v] == v for v in path):
                for v in range(self.m):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[a] = b
        root = find(w)
        return any(find(t) == root for t in tried)

    def visit(self, colors: list[int], path: list[int]) -> int | None:
        if max(colors) + 1 == self.m:
            return self._leaf(colors, path)
        counts = [0] * self.m
        for c in colors:
            counts[c] += 1
        target = next(c for c in range(self.m) if counts[c] > 1)
        cell = [v for v in range(self.m) if colors[v] == target]
        tried: list[int] = []
        depth = len(path)
        for w in cell:
            if tried and self._same_orbit(w, tried, path):
                continue
            jump = self.visit(_refine(self.nbrs, _individualise(colors, w)), path + [w])
            tried.append(w)
            if jump is not None and jump < depth:
                return jump
        return None


def _rank(values: Sequence) -> list[int]:
    table = {x: i for i, x in enumerate(sorted(set(values)))}
    return [table[x] for x in values]


def _canon_connected(g: Graph, colors: Sequence) -> tuple[list[int], tuple]:
    """Canonical vertex order and sort key of a connected graph."""
    if g.n == 1:
        return [0], (1, tuple(colors), (0,))
    search = _Search(g)
    start = _refine(search.nbrs, _rank(colors))
    search.visit(start, [])
    code, lab, _ = search.best
    order = [0] * g.n
    for v, pos in enumerate(lab):
        order[pos] = v
    return order, (g.n, tuple(colors[v] for v in order), code)


@lru_cache(maxsize=None)
def _canonical_order(g: Graph, colors: tuple | None) -> tuple[int, ...]:
    parts = []
    for verts, sub in components(g):
        sub_colors = [colors[v] for v in verts] if colors is not None else [0] * len(verts)
        order, key = _canon_connected(sub, sub_colors)
        parts.append((key, [verts[i] for i in order]))
    parts.sort(key=lambda kv: kv[0])
    return tuple(v for _, verts in parts for v in verts)


def canonical_order(g: Graph, colors: Sequence | None = None) -> list[int]:
    """Vertex order such that ``g.permute(order)`` is the canonical form.

    ``colors``, if given, are vertex colours that isomorphisms must respect.
    """
    if g.n > MAX_CANON_ORDER:
        raise UnsupportedSize(f"canonical labelling supports n <= {MAX_CANON_ORDER}, got {g.n}")
    return list(_canonical_order(g, tuple(colors) if colors is not None else None))


@lru_cache(maxsize=None)
def certificate(g: Graph) -> bytes:
    """Order byte followed by the packed upper triangle of the canonical form."""
    canon = g.permute(canonical_order(g))
    return bytes([g.n]) + write_graph6(canon)[1:].encode("ascii")


def _colored_certificate(g: Graph, colors: Sequence) -> bytes:
    order = canonical_order(g, colors)
    canon = g.permute(order)
    palette = bytes(_rank([colors[v] for v in order]))
    return bytes([g.n]) + write_graph6(canon)[1:].encode("ascii") + b"|" + palette


def _is_isomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    if sorted(mapping) != list(range(g.n)):
        return False
    for u in range(g.n):
        row = 0
        for v in _bits(g.adj[u]):
            row |= 1 << mapping[v]
        if row != h.adj[mapping[u]]:
            return False
    return True


def _mapping(g: Graph, h: Graph, order_g: Sequence[int], order_h: Sequence[int]) -> list[int]:
    mapping = [0] * g.n
    for vg, vh in zip(order_g, order_h):
        mapping[vg] = vh
    if not _is_isomorphism(g, h, mapping):
        raise ConsistencyError("canonical labellings produced a non-isomorphism")
    return mapping


def isomorphic(g: Graph, h: Graph) -> list[int] | None:
    """Vertex map ``m`` with u ~ v in g iff m[u] ~ m[v] in h, or None."""
    if g.n != h.n or certificate(g) != certificate(h):
        return None
    return _mapping(g, h, canonical_order(g), canonical_order(h))


def colored_isomorphic(g: Graph, h: Graph, cg: Sequence, ch: Sequence) -> list[int] | None:
    """Isomorphism that maps each vertex to one of the same colour."""
    if g.n != h.n or _colored_certificate(g, cg) != _colored_certificate(h, ch):
        return None
    mapping = _mapping(g, h, canonical_order(g, cg), canonical_order(h, ch))
    if any(cg[v] != ch[mapping[v]] for v in range(g.n)):
        raise ConsistencyError("coloured isomorphism does not respect colours")
    return mapping


# ------------------------------------------------------ TF-isomorphism


@dataclass(frozen=True)
class TfWitness:
    """Permutations with A_H[a][b] == A_G[q[a]][r[b]], i.e. Q A_G R = A_H."""

    q: tuple[int, ...]
    r: tuple[int, ...]

    def q_matrix(self) -> list[list[int]]:
        n = len(self.q)
        return [[int(self.q[a] == u) for u in range(n)] for a in range(n)]

    def r_matrix(self) -> list[list[int]]:
        n = len(self.r)
        return [[int(self.r[b] == u) for b in range(n)] for u in range(n)]


def verify_tf(g: Graph, h: Graph, w: TfWitness) -> bool:
    n = g.n
    if h.n != n or len(w.q) != n or len(w.r) != n:
        return False
    if sorted(w.q) != list(range(n)) or sorted(w.r) != list(range(n)):
        return False
    return all(h.has_edge(a, b) == g.has_edge(w.q[a], w.r[b]) for a in range(n) for b in range(n))


def _block_extract(phi: Sequence[int], n: int) -> tuple[list[int], list[int]]:
    """Q = (P11 + P21)^T and R = P22 + P12 as vertex maps.

    ``phi`` maps CDC(H) vertices to CDC(G) vertices; q[a] is the base vertex
    hit by (a, 0) and r[b] the base vertex hit by (b, 1).
    """
    q = [phi[a] % n for a in range(n)]
    r = [phi[n + b] % n for b in range(n)]
    return q, r


def tf_isomorphism(g: Graph, h: Graph) -> TfWitness | None:
    if g.n != h.n:
        raise DimensionError(f"orders differ: {g.n} vs {h.n}")
    if 2 * g.n > MAX_CANON_ORDER:
        raise UnsupportedSize(f"TF-isomorphism supports n <= {MAX_CANON_ORDER // 2}")
    iso_g, iso_h = g.isolated_vertices(), h.isolated_vertices()
    if len(iso_g) != len(iso_h):
        return None
    core_g = [v for v in range(g.n) if g.adj[v]]
    core_h = [v for v in range(h.n) if h.adj[v]]
    gc, hc = g.induced(core_g), h.induced(core_h)
    m = gc.n

    cdc_g, cdc_h = cdc(gc).graph, cdc(hc).graph
    phi = isomorphic(cdc_h, cdc_g)
    if phi is None:
        return None
    q, r = _block_extract(phi, m)
    if not verify_tf(gc, hc, TfWitness(tuple(q), tuple(r))):
        # The isomorphism flipped layers on some components only; a
        # layer-preserving one always exists once any isomorphism does.
        layers = [0] * m + [1] * m
        phi = colored_isomorphic(cdc_h, cdc_g, layers, layers)
        if phi is None:
            raise ConsistencyError("CDCs isomorphic but no layer-preserving isomorphism")
        q, r = _block_extract(phi, m)

    full_q = [0] * g.n
    full_r = [0] * g.n
    for a in range(m):
        full_q[core_h[a]] = core_g[q[a]]
        full_r[core_h[a]] = core_g[r[a]]
    for vh, vg in zip(iso_h, iso_g):
        full_q[vh] = vg
        full_r[vh] = vg
    witness = TfWitness(tuple(full_q), tuple(full_r))
    if not verify_tf(g, h, witness):
        raise ConsistencyError("extracted TF witness fails verification")
    return witness


def cdc_certificate(g: Graph) -> bytes:
    return certificate(cdc(g).graph)
