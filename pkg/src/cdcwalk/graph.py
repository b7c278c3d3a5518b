"""Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets.

Vertices are 0-based internally.  Anything user facing (reports, CLI output)
converts to 1-based labels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import MalformedGraph6, UnsupportedSize

MAX_ORDER = 64
MAX_GRAPH6_ORDER = 62


@dataclass(frozen=True)
class Graph:
    """A simple graph.  ``adj[v]`` is an int whose bit ``u`` is set iff u ~ v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise UnsupportedSize(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        limit = 1 << self.n
        for v, row in enumerate(self.adj):
            if row < 0 or row >= limit:
                raise ValueError(f"row {v} references a vertex >= {self.n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> Graph:
        n = len(matrix)
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if matrix[i][j]))

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def adjacency_matrix(self) -> list[list[int]]:
        return [[self.adj[i] >> j & 1 for j in range(self.n)] for i in range(self.n)]

    def permute(self, order: Iterable[int]) -> Graph:
        """Relabel so that new vertex ``i`` is old vertex ``order[i]``."""
        order = list(order)
        if sorted(order) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        position = [0] * self.n
        for i, v in enumerate(order):
            position[v] = i
        rows = []
        for v in order:
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << position[u]
            rows.append(row)
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled 0.. in the given order."""
        vertices = list(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in _bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={[(u + 1, v + 1) for u, v in self.edges()]})"


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------- graph6


def parse_graph6(line: str | bytes) -> Graph:
    """Decode a short-form graph6 record (n <= 62)."""
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    if not data:
        raise MalformedGraph6("empty graph6 record")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise MalformedGraph6(f"byte {byte!r} at offset {pos} outside 63..126")
    if data[0] == 126:
        raise MalformedGraph6("long-form graph6 (n > 62) is not supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[1:]
    if len(payload) < nbytes:
        raise MalformedGraph6(f"truncated payload: need {nbytes} bytes for n={n}, got {len(payload)}")
    if len(payload) > nbytes:
        raise MalformedGraph6(f"{len(payload) - nbytes} trailing bytes after payload for n={n}")

    bits = 0
    for byte in payload:
        bits = bits << 6 | (byte - 63)
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    bits >>= pad

    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_ORDER:
        raise UnsupportedSize(f"graph6 short form supports n <= {MAX_GRAPH6_ORDER}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    width = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def read_graph6_file(path) -> list[Graph]:
    """Read a line-delimited graph6 file; errors carry the 1-based line number."""
    graphs = []
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                graphs.append(parse_graph6(line))
            except MalformedGraph6 as exc:
                raise MalformedGraph6(f"{path}:{lineno}: {exc}") from None
    return graphs


# ------------------------------------------------------- structure


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_ORDER:
        raise UnsupportedSize(f"union would have order {g.n + h.n} > {MAX_ORDER}")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def add_isolated(g: Graph, m: int) -> Graph:
    if m < 0:
        raise ValueError("cannot add a negative number of vertices")
    return disjoint_union(g, empty_graph(m))


def components(g: Graph) -> list[tuple[tuple[int, ...], Graph]]:
    """Connected components ordered by their smallest vertex."""
    seen = 0
    result = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        verts = tuple(_bits(comp))
        result.append((verts, g.induced(verts)))
    return result


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def bipartition(g: Graph) -> Bipartition | None:
    """Two-colouring by BFS layers, smallest vertex of each component on the left."""
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in _bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    left = frozenset(v for v in range(g.n) if side[v] == 0)
    return Bipartition(left, frozenset(range(g.n)) - left)


# ---------------------------------------------------- named graphs


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))
