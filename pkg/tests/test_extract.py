import random
from collections import Counter

import pytest

from starramsey.construct import witness_double_star_odd_k, witness_substar
from starramsey.core import ColoredCompleteGraph, double_star, subdivided_star
from starramsey.extract import (
    HypothesisViolated,
    LeafFamily,
    ProofTrace,
    check_conditions,
    extract_double_star,
    extract_double_star_m1,
    extract_subdivided_star,
)

from conftest import oracle_embedding_ok, random_coloring


def grow(W, rnd):
    """Add one vertex with random edge colors to a witness, then shuffle vertex labels."""
    N = W.order + 1
    ext = [rnd.randint(1, W.colors) for _ in range(W.order)]
    perm = list(range(N))
    rnd.shuffle(perm)
    inv = {p: i for i, p in enumerate(perm)}

    def col(a, b):
        a, b = inv[a], inv[b]
        if a == W.order:
            return ext[b]
        if b == W.order:
            return ext[a]
        return W.color(a, b)

    return ColoredCompleteGraph.from_function(N, W.colors, col)


def families_balanced(trace):
    for fam in trace.families:
        assert all(L <= fam.ground for L in fam.members)
        p = {x: sum(x in L for L in fam.members) for x in fam.ground}
        assert sum(p.values()) == sum(len(L) for L in fam.members)
        assert p == fam.counts


CASES = [
    ("double-star", 3, 1, 3),
    ("double-star", 2, 1, 2),
    ("double-star", 4, 1, 3),
    ("double-star", 9, 2, 3),
    ("substar", 3, 1, 3),
    ("substar", 4, 1, 3),
    ("substar", 3, 1, 2),
]


def run(kind, n, m, G, trace):
    if kind == "double-star":
        return extract_double_star(G, n, m, trace)
    return extract_subdivided_star(G, n, m, trace=trace)


@pytest.mark.parametrize("kind,n,m,k", CASES)
def test_extractors_on_random_and_near_witness_colorings(kind, n, m, k):
    pattern = double_star(n, m) if kind == "double-star" else subdivided_star(n, m)
    cond = check_conditions(pattern, k)
    assert cond["double-star-counting" if kind == "double-star" else "substar-counting"]
    order = k * n + m + 2 if kind == "double-star" else k * (n - 1) + m + 2
    if kind == "double-star" and k % 2:
        W = witness_double_star_odd_k(n, m, k).graph
    elif kind == "substar" and k % 2:
        W = witness_substar(n, m, k).graph
    else:
        W = None
    rnd = random.Random(1000 * n + 100 * m + 10 * k + (kind == "substar"))
    paths = Counter()
    for i in range(300):
        G = grow(W, rnd) if W is not None and W.order == order - 1 and i % 2 else random_coloring(order, k, rnd)
        trace = ProofTrace()
        emb = run(kind, n, m, G, trace)
        assert emb.pattern == pattern
        assert oracle_embedding_ok(G, emb)
        families_balanced(trace)
        paths[tuple(s for s, _ in trace.steps)] += 1
    if W is not None and W.order == order - 1 and order <= 12:
        # About one near-witness run in twenty needs the family branch at these sizes.
        assert len(paths) > 1, "near-witness colorings should reach the family branch"


def test_m1_extractor():
    rnd = random.Random(2)
    W = witness_double_star_odd_k(2, 1, 3).graph
    for i in range(300):
        G = grow(W, rnd) if i % 2 else random_coloring(9, 3, rnd)
        trace = ProofTrace()
        emb = extract_double_star_m1(G, 2, trace=trace)
        assert oracle_embedding_ok(G, emb)
        families_balanced(trace)
        assert trace.lines()


def test_hypotheses_enforced():
    G = random_coloring(11, 3, random.Random(0))
    with pytest.raises(HypothesisViolated):
        extract_double_star(G, 3, 1)
    with pytest.raises(HypothesisViolated):
        extract_double_star_m1(random_coloring(9, 3, random.Random(0)), 1)
    with pytest.raises(HypothesisViolated):
        extract_subdivided_star(G, 3, 1)
    # (n+1) ceil((n+1)/(k-1)) > m((k-1)n+m) fails for S(3,3) with k=3.
    assert not check_conditions(double_star(3, 3), 3)["double-star-counting"]
    with pytest.raises(HypothesisViolated):
        extract_double_star(random_coloring(14, 3, random.Random(0)), 3, 3)


def test_conditions_report():
    c = check_conditions(double_star(3, 1), 3)
    assert c.t == 2 and c["double-star-counting"]
    assert check_conditions(double_star(2, 1), 3)["double-star-m1"]
    assert not c["no-such-key"]


def test_leaf_family_rejects_outside_leaf():
    from starramsey.construct import InternalError

    with pytest.raises(InternalError):
        LeafFamily([frozenset({1, 9})], frozenset({1, 2}))


def test_trace_serializes():
    G = grow(witness_double_star_odd_k(3, 1, 3).graph, random.Random(4))
    trace = ProofTrace()
    extract_double_star(G, 3, 1, trace)
    d = trace.to_dict()
    assert d["steps"][0]["step"] == "star"
    for fam in d["families"]:
        assert fam["sum_p"] == fam["sum_sizes"]
