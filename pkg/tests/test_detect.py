import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starramsey.core import ColoredCompleteGraph, double_star, star, subdivided_star, validate_embedding
from starramsey.detect import InstanceTooLarge, brute_force_find, find_mono

from conftest import oracle_embedding_ok, oracle_has_mono, random_coloring

PATTERNS = [star(2), star(3), double_star(1, 1), double_star(2, 1), double_star(2, 2), double_star(3, 1),
            subdivided_star(2, 1), subdivided_star(2, 2), subdivided_star(3, 1), subdivided_star(3, 2),
            subdivided_star(3, 3), subdivided_star(4, 2)]


@given(st.integers(3, 9), st.integers(1, 3), st.sampled_from(PATTERNS), st.randoms(use_true_random=False))
@settings(max_examples=300, deadline=None)
def test_detector_matches_brute_force_and_networkx(order, k, pattern, rnd):
    G = random_coloring(order, k, rnd)
    fast = find_mono(G, pattern)
    slow = brute_force_find(G, pattern)
    assert (fast is None) == (slow is None)
    if order <= 8:
        assert (fast is None) == (not oracle_has_mono(G, pattern))
    for emb in (fast, slow):
        if emb is not None:
            assert validate_embedding(G, emb)
            assert oracle_embedding_ok(G, emb)


def test_double_star_needs_private_leaves():
    # Color 1 is a triangle on 0,1,2 and color 2 is a star at 3: every edge
    # has a common neighbor but no private one, so neither class holds a P4.
    G = ColoredCompleteGraph.from_function(4, 2, lambda a, b: 2 if 3 in (a, b) else 1)
    assert find_mono(G, double_star(1, 1)) is None
    assert find_mono(G, star(2)) is not None


def test_monochromatic_graph_contains_everything_that_fits():
    G = ColoredCompleteGraph.monochromatic(7)
    for p in PATTERNS:
        assert (find_mono(G, p) is not None) == (p.vertex_count <= 7)


def test_brute_force_cutoff():
    with pytest.raises(InstanceTooLarge):
        brute_force_find(ColoredCompleteGraph.monochromatic(13), star(2))


def test_substar_detector_exercises_rerouting():
    # Random 2-colorings of K_8 vs S_4^3: every found copy is valid, and misses are confirmed.
    rnd = random.Random(7)
    p = subdivided_star(4, 3)
    for _ in range(60):
        G = random_coloring(8, 2, rnd)
        emb = find_mono(G, p)
        assert (emb is None) == (not oracle_has_mono(G, p))
