"""Randomised properties over generated graphs."""

import numpy as np
from hypothesis import given, settings, strategies as st

from cdcwalk.canon import certificate, tf_isomorphism, verify_tf
from cdcwalk.cover import cdc
from cdcwalk.exact import int_rank
from cdcwalk.graph import Graph, components, disjoint_union, parse_graph6, write_graph6
from cdcwalk.hierarchy import implication_violations, relation_profile
from cdcwalk.spectral import main_decomposition, walk_count_total
from cdcwalk.walks import main_count, walk_matrix_k


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@given(graphs(max_n=30))
def test_graph6_roundtrip(g):
    assert parse_graph6(write_graph6(g)) == g


@given(graphs(min_n=1), st.randoms(use_true_random=False))
def test_certificate_relabel_invariant(g, rng):
    order = list(range(g.n))
    rng.shuffle(order)
    assert certificate(g.permute(order)) == certificate(g)


@given(graphs(), graphs())
def test_components_of_union(g, h):
    assert len(components(disjoint_union(g, h))) == len(components(g)) + len(components(h))


@given(graphs(min_n=1))
@settings(max_examples=60)
def test_walk_rank_and_counts(g):
    p = main_count(g)
    for k in range(1, g.n + 1):
        assert int_rank(walk_matrix_k(g, k)) == min(k, p)
    dec = main_decomposition(g)
    for k in range(7):
        approx = sum(m.weight * m.value**k for m in dec.mains)
        assert abs(walk_count_total(g, k) - approx) < 1e-4 * max(1, walk_count_total(g, k))


@given(graphs(min_n=1, max_n=8))
@settings(max_examples=60)
def test_cover_spectrum(g):
    base = np.array(sorted(np.linalg.eigvalsh(np.array(g.adjacency_matrix(), float))))
    cover = np.linalg.eigvalsh(np.array(cdc(g).graph.adjacency_matrix(), float))
    assert np.allclose(np.sort(cover), np.sort(np.concatenate([base, -base])), atol=1e-6)


@given(graphs(min_n=1, max_n=8), st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_tf_relabelled_copies(g, rng):
    q = list(range(g.n))
    rng.shuffle(q)
    h = g.permute(q)
    w = tf_isomorphism(g, h)
    assert w is not None and verify_tf(g, h, w)
    assert implication_violations(relation_profile(g, h)) == []


@given(graphs(min_n=2, max_n=7), graphs(min_n=2, max_n=7))
@settings(max_examples=60)
def test_random_pairs_respect_hierarchy(g, h):
    if g.n == h.n:
        assert implication_violations(relation_profile(g, h)) == []
