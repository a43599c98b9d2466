"""Exact detectors for monochromatic stars, double stars and subdivided stars.

Each detector has a kernel working on one color class given as per-vertex
neighbor bitmasks; the search engine reuses the kernels on partially
colored graphs. :func:`brute_force_find` is an independent exhaustive oracle.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .core import (
    ColoredCompleteGraph,
    Embedding,
    Pattern,
    PatternKind,
    bits,
    embed_double_star,
    embed_star,
    embed_subdivided_star,
    lowest_bits,
    popcount,
)

Adj = Sequence[int]


class InstanceTooLarge(ValueError):
    pass


# -- kernels over a single color class -------------------------------------


def star_at(adj: Adj, v: int, n: int) -> list[int] | None:
    if popcount(adj[v]) >= n:
        return lowest_bits(adj[v], n)
    return None


def double_star_at(adj: Adj, u: int, v: int, n: int, m: int):
    """Leaves ``(u_leaves, v_leaves)`` of a copy with u carrying n leaves, or None.

    With a = |N(u) - v|, b = |N(v) - u| and t common neighbors, a copy exists
    iff a >= n, b >= m and a + b - t >= n + m. Leaves for v are drawn from
    its private neighbors first so the common ones stay available to u.
    """
    if not (adj[u] >> v) & 1:
        return None
    nu = adj[u] & ~(1 << v)
    nv = adj[v] & ~(1 << u)
    a = popcount(nu)
    b = popcount(nv)
    if a < n or b < m:
        return None
    common = nu & nv
    t = popcount(common)
    if a + b - t < n + m:
        return None
    v_leaves = lowest_bits(nv & ~common, m)
    if len(v_leaves) < m:
        v_leaves += lowest_bits(common, m - len(v_leaves))
    taken = 0
    for w in v_leaves:
        taken |= 1 << w
    u_leaves = lowest_bits(nu & ~taken, n)
    return u_leaves, v_leaves


def double_star_in_class(adj: Adj, n: int, m: int):
    """First ``(u, v, u_leaves, v_leaves)`` in (u, v) scan order, or None."""
    for u in range(len(adj)):
        if popcount(adj[u]) < n + 1:
            continue
        for v in bits(adj[u]):
            if popcount(adj[v]) < m + 1:
                continue
            found = double_star_at(adj, u, v, n, m)
            if found:
                return (u, v, *found)
    return None


def _match_into(lefts: Sequence[int], adj: Adj, right_mask: int, need: int) -> dict[int, int]:
    """Augmenting-path matching of ``lefts`` into ``right_mask``, stopping at ``need``.

    Returns ``{left: right}``.
    """
    owner: dict[int, int] = {}

    def augment(u: int, seen: list[int]) -> bool:
        for w in bits(adj[u] & right_mask & ~seen[0]):
            seen[0] |= 1 << w
            if w not in owner or augment(owner[w], seen):
                owner[w] = u
                return True
        return False

    size = 0
    for u in lefts:
        if augment(u, [0]):
            size += 1
            if size == need:
                break
    return {u: w for w, u in owner.items()}


def substar_at(adj: Adj, x: int, n: int, m: int):
    """Leaves and subdivision vertices of a copy centered at ``x``, or None.

    Any neighbor of ``x`` may either be a leaf or be freed to serve as a
    subdivision vertex. For every freed set F (at most min(deg - n, m)
    neighbors) the question is whether the remaining neighbors match m of
    themselves into the non-neighbors plus F.
    """
    order = len(adj)
    nx = adj[x]
    d = popcount(nx)
    if d < n:
        return None
    slack = min(d - n, m)
    outside = ((1 << order) - 1) & ~nx & ~(1 << x)
    free_candidates = [y for y in bits(nx) if adj[y] & nx]
    base = None
    for f in range(slack + 1):
        for freed in combinations(free_candidates, f):
            fmask = 0
            for y in freed:
                fmask |= 1 << y
            rights = outside | fmask
            lefts = [y for y in bits(nx & ~fmask) if adj[y] & rights]
            pairs = _match_into(lefts, adj, rights, m)
            if f == 0:
                base = len(pairs)
                if base + slack < m:
                    return None
            if len(pairs) >= m:
                subdivided = sorted(pairs)
                used = fmask
                for y in subdivided:
                    used |= 1 << y
                plain = lowest_bits(nx & ~used, n - m)
                return subdivided + plain, [pairs[y] for y in subdivided]
    return None


def substar_in_class(adj: Adj, n: int, m: int):
    for x in range(len(adj)):
        found = substar_at(adj, x, n, m)
        if found:
            return (x, *found)
    return None


# -- graph-level detectors --------------------------------------------------


def find_mono_star(G: ColoredCompleteGraph, n: int) -> Embedding | None:
    if n < 1:
        raise ValueError("n must be >= 1")
    for v in range(G.order):
        for c in range(1, G.colors + 1):
            leaves = star_at(G.color_class(c), v, n)
            if leaves is not None:
                return embed_star(c, v, leaves)
    return None


def find_mono_double_star(G: ColoredCompleteGraph, n: int, m: int) -> Embedding | None:
    if not n >= m >= 1:
        raise ValueError("need n >= m >= 1")
    for u in range(G.order):
        for v in range(G.order):
            if u == v:
                continue
            c = G.color(u, v)
            found = double_star_at(G.color_class(c), u, v, n, m)
            if found:
                return embed_double_star(c, u, v, *found)
    return None


def find_mono_subdivided_star(G: ColoredCompleteGraph, n: int, m: int) -> Embedding | None:
    if not (n >= 2 and n >= m >= 1):
        raise ValueError("need n >= 2 and n >= m >= 1")
    for x in range(G.order):
        for c in range(1, G.colors + 1):
            found = substar_at(G.color_class(c), x, n, m)
            if found:
                return embed_subdivided_star(c, x, *found)
    return None


def find_mono(G: ColoredCompleteGraph, pattern: Pattern) -> Embedding | None:
    """Dispatch to the specialized detector for ``pattern``."""
    if pattern.kind is PatternKind.STAR:
        return find_mono_star(G, pattern.n)
    if pattern.kind is PatternKind.DOUBLE_STAR:
        return find_mono_double_star(G, pattern.n, pattern.m)
    return find_mono_subdivided_star(G, pattern.n, pattern.m)


# -- brute-force oracle -----------------------------------------------------


def _ordered_twins(pattern: Pattern) -> set[int]:
    """Pattern vertices i whose image may be forced above that of i - 1.

    Only swaps of interchangeable leaves (or leaf/subdivision pairs) are
    quotiented out, so the search stays exhaustive up to automorphism.
    """
    n, m = pattern.n, pattern.m
    if pattern.kind is PatternKind.STAR:
        return set(range(2, n + 1))
    if pattern.kind is PatternKind.DOUBLE_STAR:
        return set(range(3, n + 2)) | set(range(n + 3, n + m + 2))
    return set(range(2, m + 1)) | set(range(m + 2, n + 1))


def brute_force_find(G: ColoredCompleteGraph, pattern: Pattern, cutoff: int = 12) -> Embedding | None:
    """Exhaustive search over injective vertex maps, color by color."""
    if G.order > cutoff:
        raise InstanceTooLarge(f"order {G.order} exceeds brute-force cutoff {cutoff}")
    size = pattern.vertex_count
    if size > G.order:
        return None
    N = G.order
    color = [[0] * N for _ in range(N)]
    for u, v, c in G.edges():
        color[u][v] = color[v][u] = c
    earlier: list[list[int]] = [[] for _ in range(size)]
    for a, b in pattern.edges():
        lo, hi = min(a, b), max(a, b)
        earlier[hi].append(lo)
    twins = _ordered_twins(pattern)
    image = [-1] * size

    def extend(i: int, c: int) -> bool:
        if i == size:
            return True
        start = image[i - 1] + 1 if i in twins else 0
        for w in range(start, N):
            if w in image[:i]:
                continue
            if all(color[w][image[j]] == c for j in earlier[i]):
                image[i] = w
                if extend(i + 1, c):
                    return True
        image[i] = -1
        return False

    for c in range(1, G.colors + 1):
        if extend(0, c):
            return Embedding(c, pattern, tuple(image))
    return None
