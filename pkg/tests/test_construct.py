import random

import pytest

from starramsey.construct import (
    Infeasible,
    InvalidArity,
    ListSizeMismatch,
    NotOddPrime,
    best_double_star_witness,
    best_substar_witness,
    relabeled_odd_coloring,
    witness_double_star_divisible,
    witness_double_star_even_k,
    witness_double_star_half_divisible,
    witness_double_star_odd_k,
    witness_list_p4,
    witness_star,
    witness_substar,
    witness_substar_2color,
)
from starramsey.core import P4, double_star, star, subdivided_star
from starramsey.search import ListAssignment

from conftest import oracle_has_mono


def assert_free(cert):
    assert cert.verified
    assert cert.claimed_bound == cert.graph.order + 1
    assert not oracle_has_mono(cert.graph, cert.pattern)


@pytest.mark.parametrize("n,m,k", [(1, 1, 3), (2, 1, 3), (3, 1, 3), (3, 2, 3), (2, 2, 5), (4, 3, 3)])
def test_odd_k(n, m, k):
    cert = witness_double_star_odd_k(n, m, k)
    assert cert.graph.order == k * n + m + 1
    assert_free(cert)


@pytest.mark.parametrize("n,m,k", [(3, 1, 4), (2, 2, 4), (2, 1, 2), (3, 3, 2)])
def test_even_k(n, m, k):
    cert = witness_double_star_even_k(n, m, k)
    assert cert.graph.order == (k - 1) * n + 2 * m + 1
    assert_free(cert)


@pytest.mark.parametrize("n,m,k", [(2, 2, 6), (1, 1, 4), (3, 1, 6), (2, 1, 5)])
def test_divisible(n, m, k):
    cert = witness_double_star_divisible(n, m, k, seed=3)
    assert cert.graph.order == k * n + m + 1
    assert_free(cert)


def test_divisible_rejects_non_divisor():
    with pytest.raises(InvalidArity):
        witness_double_star_divisible(2, 2, 5)


@pytest.mark.parametrize("n,m,k", [(4, 1, 4), (2, 1, 3), (2, 3, 4)])
def test_half_divisible(n, m, k):
    if n < m:
        with pytest.raises(InvalidArity):
            witness_double_star_half_divisible(n, m, k)
        return
    cert = witness_double_star_half_divisible(n, m, k)
    assert cert.graph.order == k * n + m + 1
    assert_free(cert)


@pytest.mark.parametrize("n,m,k", [(3, 2, 3), (3, 1, 3), (4, 4, 3), (2, 1, 5)])
def test_substar_odd(n, m, k):
    cert = witness_substar(n, m, k)
    assert cert.graph.order == k * (n - 1) + m + 1
    assert_free(cert)


@pytest.mark.parametrize("n,m", [(3, 2), (2, 1), (4, 3), (5, 2)])
def test_substar_two_colors(n, m):
    cert = witness_substar_2color(n, m)
    assert cert.graph.order == n + 2 * m
    assert_free(cert)


def test_substar_two_colors_rejects_m_equal_n():
    with pytest.raises(InvalidArity):
        witness_substar_2color(3, 3)


@pytest.mark.parametrize("n,k,order", [(3, 3, 7), (2, 4, 4), (4, 2, 6), (3, 2, 5)])
def test_star_witness(n, k, order):
    cert = witness_star(n, k, order)
    assert cert.pattern == star(n)
    assert_free(cert)


def test_star_witness_infeasible_when_degree_parity_fails():
    # K_{1,4} with two colors: 3-regular classes on 7 vertices cannot exist.
    with pytest.raises(Infeasible):
        witness_star(4, 2, 7)


def test_relabeled_odd_coloring_missing_colors():
    k = 5
    col = relabeled_odd_coloring(k)
    for i in range(k):
        at_i = {c for e, c in col.items() if i in e}
        assert at_i == set(range(1, k + 1)) - {i + 1}


def test_best_witnesses_pick_largest():
    assert best_double_star_witness(3, 1, 3).graph.order == 11
    assert best_substar_witness(3, 2, 3).graph.order == 9
    with pytest.raises(InvalidArity):
        best_double_star_witness(1, 2, 3)


def test_deterministic_given_seed():
    a = witness_double_star_divisible(2, 2, 6, seed=9).graph
    b = witness_double_star_divisible(2, 2, 6, seed=9).graph
    assert a == b


def test_list_p4_random_lists():
    rnd = random.Random(5)
    for _ in range(30):
        L = ListAssignment.random(5, 3, 5, rnd)
        G = witness_list_p4(3, L)
        assert G.order == 5 and not oracle_has_mono(G, P4)
        for u, v, c in G.edges():
            assert c in L[(u, v)]


def test_list_p4_errors():
    with pytest.raises(NotOddPrime):
        witness_list_p4(4, ListAssignment.constant(6, [1, 2, 3, 4]))
    with pytest.raises(ListSizeMismatch):
        witness_list_p4(3, ListAssignment.constant(5, [1, 2]))
