import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starramsey.core import P4, ColoredCompleteGraph, double_star, star, subdivided_star
from starramsey.detect import double_star_in_class, find_mono, star_at, substar_in_class
from starramsey.search import (
    BudgetExhausted,
    ListAssignment,
    exists_free_coloring,
    list_edge_coloring,
    list_ramsey_check,
    ramsey_exact,
    touches_pattern,
)

from conftest import oracle_has_mono, random_coloring

PATTERNS = [star(2), star(3), P4, double_star(2, 1), double_star(2, 2), subdivided_star(2, 1),
            subdivided_star(3, 1), subdivided_star(3, 2)]


def class_masks(G, c):
    return [G.neighbors_mask(v, c) for v in range(G.order)]


def in_color_one(mono, pattern):
    adj = class_masks(mono, 1)
    if pattern.kind.value == "star":
        return any(star_at(adj, v, pattern.n) for v in range(mono.order))
    if pattern.kind.value == "double-star":
        return double_star_in_class(adj, pattern.n, pattern.m) is not None
    return substar_in_class(adj, pattern.n, pattern.m) is not None


@given(st.integers(3, 8), st.sampled_from(PATTERNS), st.randoms(use_true_random=False))
@settings(max_examples=200, deadline=None)
def test_touches_pattern_finds_every_critical_edge(order, pattern, rnd):
    G = random_coloring(order, 2, rnd)
    adj = class_masks(G, 1)
    present = in_color_one(G, pattern)
    for u in range(order):
        for v in range(u + 1, order):
            if G.color(u, v) != 1:
                continue
            touched = touches_pattern(pattern, adj, u, v)
            if touched:
                assert present
            if present:
                reduced = ColoredCompleteGraph.from_function(
                    order, 2, lambda a, b: 2 if {a, b} == {u, v} else G.color(a, b))
                if not in_color_one(reduced, pattern):
                    assert touched


@pytest.mark.parametrize("pattern,k,value", [
    (P4, 2, 5), (star(2), 2, 3), (star(3), 2, 6), (star(2), 3, 5), (double_star(2, 1), 2, 6),
    (subdivided_star(2, 1), 2, 5),
    # P5 = S_2^2; Gerencser-Gyarfas gives n + floor(n/2) - 1 = 6, below n+2m+1 = 7.
    (subdivided_star(2, 2), 2, 6),
])
def test_small_exact_values(pattern, k, value):
    res = ramsey_exact(pattern, k, N_cap=8)
    assert res.value == value
    assert res.witness.order == value - 1
    assert not oracle_has_mono(res.witness, pattern)


def test_symmetry_and_workers_do_not_change_verdicts():
    for N in (4, 5):
        plain = exists_free_coloring(N, 2, P4, symmetry=False)
        sym = exists_free_coloring(N, 2, P4)
        par = exists_free_coloring(N, 2, P4, workers=2)
        assert plain.verdict == sym.verdict == par.verdict
        assert sym.nodes_explored <= plain.nodes_explored


def test_budget_exhaustion_is_not_a_verdict():
    with pytest.raises(BudgetExhausted) as info:
        exists_free_coloring(6, 3, P4, budget=50)
    assert info.value.nodes >= 50


def test_list_edge_coloring_proper_and_respects_lists():
    rnd = random.Random(8)
    for _ in range(200):
        q = rnd.choice([3, 4, 5])
        size = q if q % 2 else q - 1
        L = ListAssignment.random(q, size, size + 3, rnd)
        col = list_edge_coloring(q, L)
        assert col is not None
        for e, c in col.items():
            assert c in L[e]
        for v in range(q):
            at_v = [c for e, c in col.items() if v in e]
            assert len(at_v) == len(set(at_v)) == q - 1


def test_list_edge_coloring_unsolvable():
    # K_4 needs three colors, so lists of two identical colors fail.
    assert list_edge_coloring(4, ListAssignment.constant(4, [1, 2])) is None


def test_list_ramsey_check_constant_lists():
    assert not list_ramsey_check(5, ListAssignment.constant(5, [1, 2, 3]), P4).forced
    out = list_ramsey_check(6, ListAssignment.constant(6, [1, 2, 3]), P4)
    assert out.forced and out.verdict == "ForcedForL"


def test_list_ramsey_check_nonconstant_lists():
    rnd = random.Random(4)
    for _ in range(20):
        L = ListAssignment.random(5, 2, 4, rnd)
        out = list_ramsey_check(5, L, star(3))
        if not out.forced:
            assert find_mono(out.coloring, star(3)) is None
            for u, v, c in out.coloring.edges():
                assert c in L[(u, v)]


def test_list_assignment_validation():
    with pytest.raises(ValueError):
        ListAssignment(3, {(0, 1): frozenset({1})})
    L = ListAssignment.constant(5, [2, 7])
    assert L.is_constant() and L.size == 2 and L.universe() == 7
    sub = L.restrict([4, 1, 3])
    assert sub.order == 3 and sub[(0, 2)] == frozenset({2, 7})
