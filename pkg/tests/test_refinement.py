import random

from oracles import naive_equitable, naive_equitable_partition, small_corpus
from symred import _ops
from symred.fixtures import C4, FIXTURES, P4, STAR3, spider
from symred.graph import apply_permutation
from symred.refinement import Coloring, individualize, is_equitable, refine
from symred.solver import brute_force_aut

CORPUS = small_corpus()


def parts(pi):
    return sorted(sorted(c) for c in pi.cells())


def test_examples():
    assert parts(refine(STAR3)) == [[0], [1, 2, 3]]
    assert parts(refine(C4)) == [[0, 1, 2, 3]]
    assert parts(refine(P4)) == [[0, 3], [1, 2]]


def test_individualize_examples():
    pi = individualize(Coloring.unit(4), 0)
    assert parts(pi) == [[0], [1, 2, 3]]
    same = individualize(pi, 0)
    assert same.partition() == pi.partition()
    leaf = refine(P4, individualize(refine(P4), 0))
    assert leaf.is_discrete()


def test_is_equitable_examples():
    assert is_equitable(C4, Coloring.unit(4))
    assert not is_equitable(STAR3, Coloring.unit(4))
    assert is_equitable(P4, Coloring.from_cells([[0, 3], [1, 2]]))


def test_equitable_and_coarsest():
    for name, g in CORPUS + list(FIXTURES.items()):
        pi = refine(g)
        assert is_equitable(g, pi), name
        assert naive_equitable(g, pi.cells()), name
        assert pi.refines(Coloring.from_colors(g.colors))
        assert pi.partition() == naive_equitable_partition(g), name


def test_incremental_worklist_matches_full():
    for name, g in CORPUS[:80]:
        pi = refine(g)
        for v in range(g.n):
            q = individualize(pi, v)
            s = q.cell_of[v]
            assert refine(g, q, [s]).partition() == refine(g, q).partition(), name


def test_equivariance_with_cell_ids():
    rng = random.Random(7)
    for name, g in FIXTURES.items():
        pi = refine(g)
        for _ in range(50):
            gamma = list(range(g.n))
            rng.shuffle(gamma)
            h = apply_permutation(g, gamma)
            rho = refine(h)
            # same ids, and the id of gamma(v) in h equals the id of v in g
            assert all(rho.cell_of[gamma[v]] == pi.cell_of[v] for v in range(g.n)), name
            assert rho.cell_size == pi.cell_size


def test_refinement_keeps_automorphism_group():
    for name, g in CORPUS:
        if g.n > 8:
            continue
        pi = refine(g)
        assert set(brute_force_aut(g)) == set(brute_force_aut(g, colors=pi.as_colors())), name


def star_of_paths(k, length):
    legs = [length] * k
    return spider(legs)


def test_near_linear_scaling():
    counts = []
    for k in (50, 100, 200, 400):
        g = star_of_paths(k, 10)
        with _ops.counting() as c:
            refine(g)
        counts.append(c["refine"])
    for a, b in zip(counts, counts[1:]):
        assert b / a <= 2.5, counts


def test_individualize_refine_equivariance():
    from symred.refinement import individualize_refine
    rng = random.Random(9)
    for name, g in FIXTURES.items():
        pi = refine(g)
        for _ in range(10):
            gamma = list(range(g.n))
            rng.shuffle(gamma)
            h = apply_permutation(g, gamma)
            v = rng.randrange(g.n)
            a = individualize_refine(g, pi, v)
            b = individualize_refine(h, refine(h), gamma[v])
            assert all(b.cell_of[gamma[u]] == a.cell_of[u] for u in range(g.n)), name
