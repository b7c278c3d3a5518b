"""Named example graphs as 1-based edge lists."""

from cdcwalk.graph import Graph, parse_graph6


def from_edges(n, edges):
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


def _path_edges(*vs):
    return list(zip(vs, vs[1:]))


# Two-fold isomorphic pair on 7 vertices.
TWOFOLD_G = from_edges(7, _path_edges(1, 2, 3, 1) + _path_edges(3, 4, 5, 6, 7, 5))
TWOFOLD_H = from_edges(7, _path_edges(1, 2, 3, 4, 5, 6, 1) + [(2, 7), (7, 5)])

# Same walk matrix, non-isomorphic CDCs.
SAME_W_G = from_edges(7, _path_edges(1, 2, 3, 6, 2, 4, 1) + _path_edges(1, 5, 3) + _path_edges(4, 7, 6) + [(5, 7)])
SAME_W_H = from_edges(7, _path_edges(1, 2, 3, 6, 2, 4, 1) + _path_edges(1, 5, 4) + _path_edges(3, 7, 6) + [(5, 7)])
SAME_W_MATRIX = [(1, 3, 9)] + [(1, 3, 10)] * 4 + [(1, 3, 9), (1, 4, 12)]

# Comain, different walk matrices, non-isomorphic CDCs.
COMAIN_G = from_edges(7, _path_edges(1, 2, 3, 4, 5, 1) + _path_edges(5, 6, 7, 5))
COMAIN_H = from_edges(7, _path_edges(1, 2, 3, 4, 5, 6, 1) + [(6, 7), (4, 2)])
COMAIN_POLY = (1, -2, -4, 7, 0)
COMAIN_W_G = [
    (1, 2, 6, 12),
    (1, 2, 4, 10),
    (1, 2, 4, 10),
    (1, 2, 6, 12),
    (1, 4, 8, 24),
    (1, 2, 6, 14),
    (1, 2, 6, 14),
]
COMAIN_W_H = [
    (1, 2, 6, 12),
    (1, 3, 7, 19),
    (1, 2, 6, 14),
    (1, 3, 7, 19),
    (1, 2, 6, 12),
    (1, 3, 5, 15),
    (1, 1, 3, 5),
]

# Same principal main eigenvectors, different walk matrices.
VECTORS_G = from_edges(8, [(1, 5), (1, 6), (2, 6), (2, 7), (3, 7), (3, 8), (4, 5), (4, 8), (5, 7), (5, 8), (6, 7), (6, 8)])
VECTORS_H = from_edges(
    8,
    [(1, 5), (1, 6), (1, 8), (3, 5), (3, 6), (3, 7), (4, 5), (4, 8), (4, 7), (2, 6), (2, 8), (2, 7), (5, 6), (5, 8), (5, 7), (6, 8), (6, 7), (8, 7)],
)
VECTORS_W_G = [(1, 2)] * 4 + [(1, 4)] * 4
VECTORS_W_H = [(1, 3)] * 4 + [(1, 6)] * 4

# Related walk matrices, different principal main eigenvectors.
_HUB = [(a, b) for a in (1, 2, 3, 4) for b in (5, 6)]
RELATED_G = from_edges(6, _HUB + [(5, 6)])
RELATED_H = from_edges(6, _HUB + [(1, 2), (3, 4)])
RELATED_W_G = [(1, 2)] * 4 + [(1, 5)] * 2
RELATED_W_H = [(1, 3)] * 4 + [(1, 4)] * 2

# Same walk matrix, different 3-walk matrices: graph6 lines of the 8-vertex
# corpus, each pair with its two expected 3-walk matrices.
SAME_W_DIFF_K = [
    (
        parse_graph6("G?~vvg"),
        parse_graph6("GQyuzw"),
        [(1, 4, 20)] * 4 + [(1, 5, 21)] * 4,
        [(1, 4, 19)] * 4 + [(1, 5, 22)] * 4,
    ),
    (
        parse_graph6("G?~v~w"),
        parse_graph6("GQy}z{"),
        [(1, 4, 24)] * 4 + [(1, 6, 28)] * 4,
        [(1, 4, 22)] * 4 + [(1, 6, 30)] * 4,
    ),
]
