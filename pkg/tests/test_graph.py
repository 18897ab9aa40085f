import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_is_automorphism, small_corpus
from symred.fixtures import C4, FIXTURES, P3, P4, PETERSEN, cycle
from symred.graph import (GraphError, apply_permutation, build_graph, from_adjacency, induced_subgraph,
                          is_automorphism)
from symred.perm import SparseAutomorphism
from symred.solver import brute_force_aut


def test_build_path_and_cycle():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert [g.degree(v) for v in range(3)] == [1, 2, 1]
    c = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c.m == 4 and c == C4


@pytest.mark.parametrize("n,edges,msg", [
    (1, [(0, 0)], "self-loop"),
    (3, [(0, 1), (1, 0)], "duplicate"),
    (2, [(0, 2)], "out of range"),
])
def test_build_rejects(n, edges, msg):
    with pytest.raises(GraphError, match=msg):
        build_graph(n, edges)


def test_colors_are_dense():
    g = build_graph(3, [], [7, -1, 7])
    assert g.colors == [1, 0, 1]
    assert build_graph(2, [], {1: 5}).colors == [0, 1]


def test_adjacency_invariants():
    for _, g in small_corpus():
        assert sum(len(a) for a in g.adj) == 2 * g.m
        for v in range(g.n):
            assert g.adj[v] == sorted(set(g.adj[v])) and v not in g.adj[v]
            assert all(v in g.adj[u] for u in g.adj[v])
        assert list(g.indptr[1:] - g.indptr[:-1]) == [len(a) for a in g.adj]


def test_normalization_idempotent():
    for g in FIXTURES.values():
        assert build_graph(g.n, list(g.edges()), g.colors) == g


def test_induced_subgraph():
    h, ren = induced_subgraph(C4, {0, 1, 2})
    assert h == P3 and ren.backward == [0, 1, 2]
    e, _ = induced_subgraph(P3, set())
    assert e.n == 0 and e.m == 0
    # vertices 0..4 of the Petersen fixture form its outer 5-cycle
    h, _ = induced_subgraph(PETERSEN, range(5))
    brute = [(u, v) for u, v in PETERSEN.edges() if u < 5 and v < 5]
    assert h.m == len(brute) == 5 and h == cycle(5)


def test_renaming_roundtrip_and_reinflation():
    rng = random.Random(3)
    for _, g in small_corpus()[:60]:
        keep = sorted(v for v in range(g.n) if rng.random() < 0.6)
        h, ren = induced_subgraph(g, keep)
        assert all(ren.forward[ren.backward[i]] == i for i in range(h.n))
        # re-inflate: map edges back and compare with the filtered original edges
        back = {(ren.backward[u], ren.backward[v]) for u, v in h.edges()}
        assert back == {(u, v) for u, v in g.edges() if u in keep and v in keep}


def test_apply_permutation_examples():
    assert apply_permutation(P3, [0, 1, 2]) == P3
    assert apply_permutation(P3, SparseAutomorphism.from_cycles([(0, 2)])) == P3
    assert apply_permutation(P4, SparseAutomorphism.from_cycles([(0, 1)])) != P4
    with pytest.raises(GraphError):
        apply_permutation(P3, [0, 0, 1])


def test_is_automorphism_examples():
    assert is_automorphism(C4, SparseAutomorphism.from_cycles([(0, 1), (2, 3)]))
    assert not is_automorphism(C4, SparseAutomorphism.from_cycles([(0, 1)]))
    for perm in brute_force_aut(PETERSEN):
        assert is_automorphism(PETERSEN, list(perm))


def test_colored_automorphism():
    g = build_graph(3, [(0, 1), (1, 2)], [0, 1, 2])
    assert not is_automorphism(g, [2, 1, 0])


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(sorted(FIXTURES)), st.randoms(use_true_random=False))
def test_is_automorphism_matches_naive(name, rnd):
    g = FIXTURES[name]
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert is_automorphism(g, perm) == naive_is_automorphism(g, perm)
    assert is_automorphism(g, SparseAutomorphism.from_array(perm)) == naive_is_automorphism(g, perm)


def test_from_adjacency_sorts():
    g = from_adjacency([[2, 1], [0], [0]], [0, 0, 0])
    assert g.adj == [[1, 2], [0], [0]]
