import random
from itertools import permutations

import pytest

from cdcwalk.canon import (
    TfWitness,
    canonical_order,
    cdc_certificate,
    certificate,
    colored_isomorphic,
    isomorphic,
    tf_isomorphism,
    verify_tf,
    _block_extract,
)
from cdcwalk.cover import cdc
from cdcwalk.errors import UnsupportedSize
from cdcwalk.graph import (
    Graph,
    add_isolated,
    complete_bipartite_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
)

from conftest import graphs_of_order, graphs_up_to
from known_graphs import SAME_W_G, SAME_W_H, TWOFOLD_G, TWOFOLD_H


def brute_canon(g: Graph) -> tuple:
    """Smallest sorted edge list over all n! relabellings."""
    best = None
    for perm in permutations(range(g.n)):
        code = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or code < best:
            best = code
    return (g.n, best)


def relabel(g: Graph, rng: random.Random) -> Graph:
    order = list(range(g.n))
    rng.shuffle(order)
    return g.permute(order)


def random_graph(rng, n, density=0.5):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density])


def test_certificate_matches_brute_force_on_corpus():
    for n in range(1, 7):
        seen_brute, seen_cert = set(), set()
        for g in graphs_of_order(n):
            seen_brute.add(brute_canon(g))
            seen_cert.add(certificate(g))
        count = len(graphs_of_order(n))
        assert len(seen_brute) == count
        assert len(seen_cert) == count


def test_certificate_agrees_with_brute_force_random_pairs():
    rng = random.Random(3)
    for _ in range(400):
        n = rng.randint(1, 6)
        g = random_graph(rng, n, rng.random())
        h = relabel(g, rng) if rng.random() < 0.5 else random_graph(rng, n, rng.random())
        assert (certificate(g) == certificate(h)) == (brute_canon(g) == brute_canon(h))


def test_relabel_invariance():
    rng = random.Random(4)
    pool = list(graphs_of_order(7)[::7]) + list(graphs_of_order(8)[::97])
    for g in pool:
        for _ in range(3):
            h = relabel(g, rng)
            assert certificate(h) == certificate(g)
            m = isomorphic(g, h)
            assert m is not None
            assert all(g.has_edge(u, v) == h.has_edge(m[u], m[v]) for u in range(g.n) for v in range(g.n))


def test_canonical_form_of_covers_relabel_invariant():
    rng = random.Random(5)
    for g in graphs_of_order(8)[::301]:
        c = cdc(g).graph
        assert certificate(relabel(c, rng)) == certificate(c)


def test_examples():
    assert certificate(cdc(cycle_graph(3)).graph) == certificate(cycle_graph(6))
    assert certificate(cycle_graph(6)) != certificate(disjoint_union(cycle_graph(3), cycle_graph(3)))
    k23 = complete_bipartite_graph(2, 3)
    assert isomorphic(cdc(k23).graph, disjoint_union(k23, k23)) is not None
    assert isomorphic(cdc(SAME_W_G).graph, cdc(SAME_W_H).graph) is None
    assert isomorphic(path_graph(3), path_graph(3)) == [0, 1, 2]
    assert isomorphic(path_graph(3), cycle_graph(3)) is None
    assert isomorphic(path_graph(3), path_graph(4)) is None


def test_size_limit():
    with pytest.raises(UnsupportedSize):
        certificate(empty_graph(21))
    with pytest.raises(UnsupportedSize):
        tf_isomorphism(empty_graph(11), empty_graph(11))


def test_canonical_order_is_permutation():
    for g in graphs_of_order(6):
        assert sorted(canonical_order(g)) == list(range(g.n))


def test_colored_isomorphism_respects_colours():
    g = path_graph(3)
    assert colored_isomorphic(g, g, [0, 1, 0], [0, 1, 0]) is not None
    assert colored_isomorphic(g, g, [1, 0, 0], [0, 0, 1]) == [2, 1, 0]
    assert colored_isomorphic(g, g, [0, 0, 1], [0, 1, 0]) is None


def test_tf_examples():
    n = TWOFOLD_G.n
    ident = TfWitness(tuple(range(n)), tuple(range(n)))
    assert verify_tf(TWOFOLD_G, TWOFOLD_G, ident)
    assert not verify_tf(TWOFOLD_G, TWOFOLD_H, ident)
    w = tf_isomorphism(TWOFOLD_G, TWOFOLD_H)
    assert w is not None and verify_tf(TWOFOLD_G, TWOFOLD_H, w)
    assert tf_isomorphism(SAME_W_G, SAME_W_H) is None
    w = tf_isomorphism(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3)))
    assert w is not None


def test_tf_witness_matrices():
    w = tf_isomorphism(TWOFOLD_G, TWOFOLD_H)
    import numpy as np

    q, r = np.array(w.q_matrix()), np.array(w.r_matrix())
    a_g, a_h = np.array(TWOFOLD_G.adjacency_matrix()), np.array(TWOFOLD_H.adjacency_matrix())
    assert (q @ a_g @ r == a_h).all()


def test_tf_iff_cdc_certificates_and_symmetric():
    gs = graphs_up_to(5)
    for g in gs:
        for h in gs:
            if g.n != h.n:
                continue
            w = tf_isomorphism(g, h)
            assert (w is not None) == (cdc_certificate(g) == cdc_certificate(h))
            assert (w is None) == (tf_isomorphism(h, g) is None)
            if w is not None:
                assert verify_tf(g, h, w)


def test_tf_with_isolated_vertices():
    g = add_isolated(TWOFOLD_G, 1)
    h = add_isolated(TWOFOLD_H, 1).permute([7, 0, 1, 2, 3, 4, 5, 6])
    w = tf_isomorphism(g, h)
    assert w is not None and verify_tf(g, h, w)
    assert tf_isomorphism(add_isolated(cycle_graph(4), 1), add_isolated(path_graph(4), 1)) is None
    assert tf_isomorphism(add_isolated(path_graph(2), 2), path_graph(4)) is None


def test_block_extraction_needs_consistent_layers():
    # CDC(P3 + P3) is four copies of P3.  Exchange the copy {0b, 1a, 2b} with
    # {3a, 4b, 5a} and fix the rest: an isomorphism of the covers whose raw
    # block split is not a pair of permutations.
    g = disjoint_union(path_graph(3), path_graph(3))
    n = g.n
    phi = list(range(2 * n))
    swap = {n + 0: 3, 1: n + 4, n + 2: 5}
    for u, v in swap.items():
        phi[u], phi[v] = v, u
    c = cdc(g).graph
    assert sorted(phi) == list(range(2 * n))
    assert all(c.has_edge(u, v) == c.has_edge(phi[u], phi[v]) for u in range(2 * n) for v in range(2 * n))
    q, r = _block_extract(phi, n)
    assert sorted(q) != list(range(n))
    rng = random.Random(9)
    for _ in range(30):
        h = relabel(g, rng)
        w = tf_isomorphism(g, h)
        assert w is not None and verify_tf(g, h, w)
