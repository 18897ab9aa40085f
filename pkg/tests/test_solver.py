import pytest

from oracles import naive_is_automorphism, small_corpus
from symred.fixtures import ASYMMETRIC_TREE, C4, MATCH_GADGET, P3, PETERSEN, Q3, STAR3
from symred.perm import SparseAutomorphism
from symred.scheduler import preprocess, reconstruct_group
from symred.solver import OracleLimitError, brute_force_aut, group_closure, group_order, ir_solve


def test_brute_force_examples():
    assert set(brute_force_aut(P3)) == {(0, 1, 2), (2, 1, 0)}
    assert len(brute_force_aut(C4)) == 8
    assert len(brute_force_aut(PETERSEN)) == 120
    with pytest.raises(OracleLimitError):
        brute_force_aut(MATCH_GADGET)


def test_brute_force_complete_and_sound():
    import itertools
    for name, g in small_corpus():
        if g.n > 6:
            continue
        naive = {p for p in itertools.permutations(range(g.n)) if naive_is_automorphism(g, p)}
        assert set(brute_force_aut(g)) == naive, name


def test_closure_examples():
    c = SparseAutomorphism.from_cycles
    assert group_closure([c([(0, 1)])], 2) == {(0, 1), (1, 0)}
    assert len(group_closure([c([(0, 1)]), c([(1, 2)])], 3)) == 6
    assert group_order(reconstruct_group(preprocess(STAR3), []), 4) == 6 == len(brute_force_aut(STAR3))
    assert group_closure([], 3) == {(0, 1, 2)}
    with pytest.raises(ValueError):
        group_closure([c([(0, 1)]), c([(0, 1, 2, 3, 4, 5, 6)])], 7, cap=100)


def test_ir_solve_examples():
    assert ir_solve(ASYMMETRIC_TREE) == []
    assert group_order(ir_solve(C4), 4) == 8
    assert group_order(ir_solve(Q3), 8) == 48
    assert group_order(ir_solve(PETERSEN), 10) == 120
    from symred.graph import build_graph
    from symred.lifting import RepresentationMap
    from symred.reductions import reduce_obfuscated_matchings
    from symred.refinement import refine
    core, pi, _ = reduce_obfuscated_matchings(MATCH_GADGET, refine(MATCH_GADGET), RepresentationMap())
    core = build_graph(core.n, core.edges(), pi.as_colors())
    assert core.n == 8
    assert group_order(ir_solve(core), core.n) == len(brute_force_aut(core)) == 24


def test_ir_solve_matches_oracle():
    for name, g in small_corpus():
        gens = ir_solve(g)
        assert all(naive_is_automorphism(g, x.to_array(g.n)) for x in gens), name
        assert group_closure(gens, g.n) == set(brute_force_aut(g)), name


def test_ir_solve_deterministic():
    for g in (Q3, PETERSEN, C4):
        assert ir_solve(g) == ir_solve(g)
