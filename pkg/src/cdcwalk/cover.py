"""Canonical double coverings (the direct product with K_2)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedSize
from .graph import MAX_ORDER, Graph


@dataclass(frozen=True)
class CdcGraph:
    """CDC of ``base``: vertex v is copy (v, 0), vertex n + v is copy (v, 1)."""

    base: Graph
    graph: Graph

    @property
    def n(self) -> int:
        return self.base.n

    def layer(self, v: int) -> int:
        return 0 if v < self.base.n else 1

    def base_vertex(self, v: int) -> int:
        return v % self.base.n

    def vertex(self, v: int, layer: int) -> int:
        return v + layer * self.base.n


def cdc(g: Graph) -> CdcGraph:
    """Block adjacency [[O, A], [A, O]]: (u, 0) ~ (v, 1) iff u ~ v."""
    if 2 * g.n > MAX_ORDER:
        raise UnsupportedSize(f"CDC of an order-{g.n} graph exceeds {MAX_ORDER} vertices")
    shifted = tuple(row << g.n for row in g.adj)
    return CdcGraph(g, Graph(2 * g.n, shifted + g.adj))
