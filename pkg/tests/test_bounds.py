import pytest

from starramsey.bounds import bounds_double_star, bounds_for, bounds_p4, bounds_star, bounds_substar, star_ramsey
from starramsey.core import P4, double_star, star, subdivided_star


def burr_roberts(n, k):
    # k(n-1)+1 when n and k are both even, else k(n-1)+2.
    return k * (n - 1) + (1 if n % 2 == 0 and k % 2 == 0 else 2)


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("k", range(2, 7))
def test_star_values(n, k):
    if n == 1:
        assert star_ramsey(1, k) == 2
        return
    assert star_ramsey(n, k) == burr_roberts(n, k)
    assert bounds_star(n, k).exact == burr_roberts(n, k)


@pytest.mark.parametrize("k,expected", [(1, 4), (2, 5), (3, 6), (4, 10), (5, 11), (7, 16), (8, 17)])
def test_p4_irving(k, expected):
    assert bounds_p4(k).exact == expected


@pytest.mark.parametrize("k", [6, 9, 12])
def test_p4_epsilon_zero_is_a_range(k):
    rep = bounds_p4(k)
    assert rep.exact is None
    assert (rep.lower, rep.upper) == (2 * k, 2 * k + 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_double_star_m1_two_colors(n):
    assert bounds_double_star(n, 1, 2).exact == 2 * n + 2 - n % 2


def test_certified_double_star_values():
    assert bounds_double_star(3, 1, 3).exact == 12
    assert bounds_double_star(3, 2, 2).exact == 9
    rep = bounds_double_star(6, 3, 5)
    assert rep.exact is None and rep.upper is None and rep.lower == 35


@pytest.mark.parametrize("n,m", [(5, 2), (6, 2), (7, 2), (8, 3), (9, 3), (10, 3)])
def test_substar_two_colors_equals_star(n, m):
    eps = (n - 1) % 2
    if n < 3 * m - 1 + eps:
        assert bounds_substar(n, m, 2).exact is None
        return
    rep = bounds_substar(n, m, 2)
    assert rep.exact == 2 * n - eps == star_ramsey(n, 2)
    assert rep.list_exact == rep.exact


def test_substar_three_colors():
    assert bounds_substar(3, 1, 3).exact == 9


def test_substar_m_equal_n_uses_certified_lower_bound():
    rep = bounds_substar(3, 3, 2)
    assert rep.lower == 8
    uncertified = [e for e in rep.entries if not e.certified and e.side == "lower"]
    assert any(e.value == 10 for e in uncertified)


def test_every_report_is_consistent():
    for k in range(2, 6):
        for n in range(1, 7):
            for m in range(1, n + 1):
                rep = bounds_for(double_star(n, m), k)
                assert rep.upper is None or rep.lower <= rep.upper
                if n >= 2:
                    rep = bounds_for(subdivided_star(n, m), k)
                    assert rep.upper is None or rep.lower <= rep.upper
        assert bounds_for(P4, k).exact == bounds_p4(k).exact
        assert bounds_for(star(3), k).exact == burr_roberts(3, k)


def test_summary_and_dict():
    rep = bounds_p4(5)
    assert rep.summary().endswith("exact 11")
    d = rep.to_dict()
    assert d["exact"] == 11 and d["lower_provenance"]
    assert bounds_double_star(6, 3, 5).summary().endswith("range [35, inf)")
