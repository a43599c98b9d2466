"""Shared fixtures and an independent checker that does not use starramsey's detectors."""

from __future__ import annotations

import random

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from starramsey.core import ColoredCompleteGraph, PatternKind


def pattern_graph(kind: str, n: int, m: int = 0) -> nx.Graph:
    """Build the target graph from its definition, independently of Pattern.edges()."""
    H = nx.Graph()
    if kind == "star":
        H.add_edges_from(("c", ("leaf", i)) for i in range(n))
    elif kind == "double-star":
        H.add_edge("u", "v")
        H.add_edges_from(("u", ("a", i)) for i in range(n))
        H.add_edges_from(("v", ("b", i)) for i in range(m))
    else:
        H.add_edges_from(("c", ("leaf", i)) for i in range(n))
        H.add_edges_from((("leaf", i), ("sub", i)) for i in range(m))
    return H


def color_class_graph(G: ColoredCompleteGraph, c: int) -> nx.Graph:
    F = nx.Graph()
    F.add_nodes_from(range(G.order))
    F.add_edges_from((u, v) for u in range(G.order) for v in range(u + 1, G.order) if G.color(u, v) == c)
    return F


def oracle_has_mono(G: ColoredCompleteGraph, pattern) -> bool:
    H = pattern_graph(PatternKind(pattern.kind).value, pattern.n, pattern.m)
    for c in range(1, G.colors + 1):
        F = color_class_graph(G, c)
        if F.number_of_edges() >= H.number_of_edges() and GraphMatcher(F, H).subgraph_is_monomorphic():
            return True
    return False


def oracle_embedding_ok(G: ColoredCompleteGraph, emb) -> bool:
    """Check an embedding's image is an injective monochromatic copy, using only G.color."""
    p = emb.pattern
    H = pattern_graph(PatternKind(p.kind).value, p.n, p.m)
    vm = list(emb.vertex_map)
    if len(vm) != H.number_of_nodes() or len(set(vm)) != len(vm):
        return False
    image = nx.Graph()
    image.add_edges_from(emb.host_edges())
    if any(G.color(a, b) != emb.color for a, b in image.edges()):
        return False
    return image.number_of_nodes() == len(vm) and nx.is_isomorphic(image, H)


def random_coloring(order: int, k: int, rng: random.Random) -> ColoredCompleteGraph:
    return ColoredCompleteGraph(order, k, [rng.randint(1, k) for _ in range(order * (order - 1) // 2)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
