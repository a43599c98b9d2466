"""Edge colorings and factorizations consumed by the witness constructions.

Hosts here are explicit simple graphs (vertex count plus an edge set of
``(u, v)`` pairs with ``u < v``); the complete-graph colorings live in
:mod:`starramsey.core`.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

Edge = tuple[int, int]


class FactorizationError(ValueError):
    pass


class NotEvenRegular(FactorizationError):
    pass


class ArityMismatch(FactorizationError):
    pass


class NotBipartite(FactorizationError):
    pass


class ExtractionFailed(FactorizationError):
    def __init__(self, message: str, found: int):
        super().__init__(message)
        self.found = found


def norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    order: int
    edges: frozenset[Edge]

    @classmethod
    def of(cls, order: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        es = frozenset(norm(u, v) for u, v in edges)
        for u, v in es:
            if u == v or not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"bad edge {(u, v)} for order {order}")
        return cls(order, es)

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def regular_degree(self) -> int | None:
        deg = self.degrees()
        return deg[0] if deg and all(d == deg[0] for d in deg) else None


def complete_graph(q: int) -> SimpleGraph:
    return SimpleGraph(q, frozenset((u, v) for u in range(q) for v in range(u + 1, q)))


def complete_multipartite(parts: Sequence[Sequence[int]]) -> SimpleGraph:
    """Complete graph on the union of ``parts`` minus every edge inside a part."""
    part_of = {}
    for i, p in enumerate(parts):
        for v in p:
            part_of[v] = i
    order = len(part_of)
    es = frozenset(
        (u, v) for u in range(order) for v in range(u + 1, order) if part_of[u] != part_of[v]
    )
    return SimpleGraph(order, es)


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.of(n, [(i, (i + 1) % n) for i in range(n)])


@dataclass(frozen=True)
class Factorization:
    """Edge-disjoint spanning factors ``factors[i]``, each ``degrees[i]``-regular."""

    host: SimpleGraph
    factors: tuple[frozenset[Edge], ...]
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class BipartiteCertificate:
    matching: frozenset[tuple[Hashable, Hashable]]
    cover: frozenset[Hashable]


# -- proper colorings of complete graphs ------------------------------------


def proper_edge_coloring_complete(q: int) -> tuple[dict[Edge, int], list[int] | None]:
    """Proper edge coloring of K_q with chromatic-index many colors.

    Odd ``q``: ``color(uv) = (u + v) mod q + 1``; vertex ``v`` misses color
    ``2v mod q + 1`` and these are pairwise distinct. Even ``q``: round robin
    with hub ``q - 1``, ``q - 1`` colors, nothing missing.
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    coloring: dict[Edge, int] = {}
    if q % 2 == 1:
        for u in range(q):
            for v in range(u + 1, q):
                coloring[(u, v)] = (u + v) % q + 1
        return coloring, [(2 * v) % q + 1 for v in range(q)]
    for r, matching in enumerate(_round_robin(q)):
        for e in matching:
            coloring[e] = r + 1
    return coloring, None


def _round_robin(q: int) -> list[list[Edge]]:
    hub = q - 1
    rounds = []
    for r in range(q - 1):
        pairs = [norm(r, hub)]
        for i in range(1, q // 2):
            pairs.append(norm((r + i) % (q - 1), (r - i) % (q - 1)))
        rounds.append(pairs)
    return rounds


def one_factorization_even(q: int) -> Factorization:
    if q < 2 or q % 2:
        raise ValueError("q must be even and >= 2")
    factors = tuple(frozenset(m) for m in _round_robin(q))
    return Factorization(complete_graph(q), factors, (1,) * (q - 1))


# -- bipartite matching and Koenig covers -----------------------------------


def hopcroft_karp(n_left: int, n_right: int, adj: Sequence[Sequence[int]]) -> list[int]:
    """Maximum bipartite matching; returns ``match_left`` (-1 when unmatched)."""
    INF = n_left + n_right + 1
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0] * n_left

    def bfs() -> bool:
        q = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = False
        while q:
            u = q.popleft()
            for w in adj[u]:
                x = match_r[w]
                if x == -1:
                    found = True
                elif dist[x] == INF:
                    dist[x] = dist[u] + 1
                    q.append(x)
        return found

    def dfs(u: int) -> bool:
        for w in adj[u]:
            x = match_r[w]
            if x == -1 or (dist[x] == dist[u] + 1 and dfs(x)):
                match_l[u] = w
                match_r[w] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in range(n_left):
            if match_l[u] == -1:
                dfs(u)
    return match_l


def koenig_cover(n_left: int, n_right: int, adj: Sequence[Sequence[int]], match_l: Sequence[int]):
    """Minimum vertex cover from a maximum matching, as (left set, right set).

    Z is everything reachable from unmatched left vertices along alternating
    paths; the cover is (L \\ Z) | (R & Z).
    """
    match_r = [-1] * n_right
    for u, w in enumerate(match_l):
        if w != -1:
            match_r[w] = u
    seen_l = [False] * n_left
    seen_r = [False] * n_right
    q = deque(u for u in range(n_left) if match_l[u] == -1)
    for u in q:
        seen_l[u] = True
    while q:
        u = q.popleft()
        for w in adj[u]:
            if not seen_r[w] and match_l[u] != w:
                seen_r[w] = True
                x = match_r[w]
                if x != -1 and not seen_l[x]:
                    seen_l[x] = True
                    q.append(x)
    return (
        {u for u in range(n_left) if not seen_l[u]},
        {w for w in range(n_right) if seen_r[w]},
    )


def max_matching_min_cover(
    left: Iterable[Hashable], right: Iterable[Hashable], edges: Iterable[tuple[Hashable, Hashable]]
) -> BipartiteCertificate:
    """König certificate for a bipartite graph given with its bipartition.

    Edges may be listed in either orientation. Matching pairs are returned
    as ``(left_vertex, right_vertex)``.
    """
    left = list(dict.fromkeys(left))
    right = list(dict.fromkeys(right))
    li = {x: i for i, x in enumerate(left)}
    ri = {x: i for i, x in enumerate(right)}
    if set(li) & set(ri):
        raise NotBipartite("a vertex lies on both sides")
    adj: list[list[int]] = [[] for _ in left]
    for a, b in edges:
        if a in li and b in ri:
            u, w = li[a], ri[b]
        elif b in li and a in ri:
            u, w = li[b], ri[a]
        else:
            raise NotBipartite(f"edge {(a, b)} does not cross the bipartition")
        if w not in adj[u]:
            adj[u].append(w)
    match_l = hopcroft_karp(len(left), len(right), adj)
    cl, cr = koenig_cover(len(left), len(right), adj, match_l)
    matching = frozenset((left[u], right[w]) for u, w in enumerate(match_l) if w != -1)
    cover = frozenset([left[u] for u in cl] + [right[w] for w in cr])
    assert len(matching) == len(cover)
    return BipartiteCertificate(matching, cover)


# -- general maximum matching (Edmonds) --------------------------------------


def max_matching_general(order: int, edges: Iterable[Edge], greedy_init: bool = True) -> list[int]:
    """Maximum cardinality matching via Edmonds' blossom algorithm.

    Returns ``mate`` with ``mate[v] == -1`` for exposed vertices. Edge order
    drives tie-breaking, which the randomized retry in
    :func:`extract_perfect_matchings` relies on.
    """
    edges = list(edges)
    adj: list[list[int]] = [[] for _ in range(order)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    mate = [-1] * order
    if greedy_init:
        for u, v in edges:
            if mate[u] == -1 and mate[v] == -1:
                mate[u] = v
                mate[v] = u

    for root in range(order):
        if mate[root] != -1:
            continue
        end, parent = _augmenting_path(order, adj, mate, root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = nxt
    return mate


def _augmenting_path(order: int, adj, mate, root):
    parent = [-1] * order
    base = list(range(order))
    used = [False] * order
    used[root] = True
    q = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * order
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while q:
        v = q.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cb = lca(v, to)
                blossom = [False] * order
                mark(v, cb, to, blossom)
                mark(to, cb, v, blossom)
                for i in range(order):
                    if blossom[base[i]]:
                        base[i] = cb
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                used[mate[to]] = True
                q.append(mate[to])
    return -1, parent


def extract_perfect_matchings(
    host: SimpleGraph, count: int, seed: int = 0, budget: int = 50
) -> tuple[Factorization, frozenset[Edge]]:
    """Peel ``count`` edge-disjoint perfect matchings off ``host``.

    Greedy peeling can dead-end even when disjoint 1-factors exist, so each
    failed attempt is retried with a reshuffled edge order, up to ``budget``
    attempts. Returns the matchings and the remaining edge set.
    """
    if host.order % 2:
        raise ValueError("perfect matchings need even order")
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = random.Random(seed)
    best = 0
    half = host.order // 2
    for attempt in range(budget):
        remaining = set(host.edges)
        found: list[frozenset[Edge]] = []
        for _ in range(count):
            order = sorted(remaining)
            if attempt:
                rng.shuffle(order)
            mate = max_matching_general(host.order, order)
            m = frozenset(norm(v, mate[v]) for v in range(host.order) if mate[v] > v)
            if len(m) < half:
                break
            found.append(m)
            remaining -= m
        if len(found) == count:
            union = frozenset().union(*found)
            fact = Factorization(SimpleGraph(host.order, union), tuple(found), (1,) * count)
            return fact, frozenset(remaining)
        best = max(best, len(found))
    raise ExtractionFailed(
        f"found only {best} of {count} disjoint perfect matchings in {budget} attempts", best
    )


# -- Petersen 2-factorization ------------------------------------------------


def _euler_circuits(order: int, edges: Sequence[Edge]) -> list[list[tuple[int, int]]]:
    """Closed trails covering every edge once, as lists of oriented arcs.

    Every vertex must have even degree.
    """
    adj: list[list[int]] = [[] for _ in range(order)]
    for i, (a, b) in enumerate(edges):
        adj[a].append(i)
        adj[b].append(i)
    used = [False] * len(edges)
    ptr = [0] * order
    circuits = []
    for s in range(order):
        stack: list[tuple[int, int, int]] = [(s, -1, -1)]
        circuit: list[tuple[int, int]] = []
        while stack:
            v, ei, frm = stack[-1]
            a = adj[v]
            while ptr[v] < len(a) and used[a[ptr[v]]]:
                ptr[v] += 1
            if ptr[v] == len(a):
                stack.pop()
                if ei != -1:
                    circuit.append((frm, v))
            else:
                e = a[ptr[v]]
                used[e] = True
                x, y = edges[e]
                stack.append((y if x == v else x, e, v))
        if circuit:
            circuit.reverse()
            circuits.append(circuit)
    return circuits


def _split_regular_bipartite(n: int, arcs: list[tuple[int, int]], r: int) -> list[list[tuple[int, int]]]:
    """Split an r-regular bipartite graph (left/right both ``range(n)``) into r perfect matchings."""
    if r == 1:
        return [arcs]
    if r % 2 == 0:
        flat = [(a, n + b) for a, b in arcs]
        halves: tuple[list, list] = ([], [])
        for circuit in _euler_circuits(2 * n, flat):
            for i, (x, y) in enumerate(circuit):
                a, b = (x, y) if x < n else (y, x)
                halves[i % 2].append((a, b - n))
        return _split_regular_bipartite(n, halves[0], r // 2) + _split_regular_bipartite(
            n, halves[1], r // 2
        )
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in arcs:
        adj[a].append(b)
    match_l = hopcroft_karp(n, n, adj)
    if -1 in match_l:
        raise FactorizationError("regular bipartite graph without a perfect matching")
    matching = [(a, match_l[a]) for a in range(n)]
    taken = set(matching)
    rest = [arc for arc in arcs if arc not in taken]
    return [matching] + _split_regular_bipartite(n, rest, r - 1)


def two_factorization(host: SimpleGraph) -> Factorization:
    """Partition a 2r-regular graph into r edge-disjoint 2-factors.

    Orient each component along an Euler circuit, so every vertex has r
    out-arcs and r in-arcs; the out/in bipartite graph is then r-regular and
    splits into r perfect matchings, each of which is a 2-factor.
    """
    d = host.regular_degree()
    if d is None or d == 0 or d % 2:
        raise NotEvenRegular(f"host is not regular of positive even degree (degree {d})")
    r = d // 2
    arcs = [arc for c in _euler_circuits(host.order, sorted(host.edges)) for arc in c]
    matchings = _split_regular_bipartite(host.order, arcs, r)
    factors = tuple(frozenset(norm(a, b) for a, b in m) for m in matchings)
    return Factorization(host, factors, (2,) * r)


def decompose_into_n_factors(host: SimpleGraph, n: int, count: int, seed: int = 0, budget: int = 50) -> Factorization:
    """Partition an ``n * count``-regular host into ``count`` edge-disjoint n-factors.

    Even ``n``: group consecutive 2-factors. Odd ``n``: peel ``count`` perfect
    matchings first, 2-factorize the rest, then add one matching per group.
    """
    if n < 1 or count < 1:
        raise ValueError("n and count must be positive")
    d = host.regular_degree()
    if d != n * count:
        raise ArityMismatch(f"host degree {d} != n * count = {n * count}")
    half = n // 2
    if n % 2 == 0:
        twos = two_factorization(host).factors
        groups = [frozenset().union(*twos[i * half:(i + 1) * half]) for i in range(count)]
    else:
        if host.order % 2:
            raise ArityMismatch("odd n needs a host of even order")
        ones, rest = extract_perfect_matchings(host, count, seed=seed, budget=budget)
        groups = list(ones.factors)
        if half:
            twos = two_factorization(SimpleGraph(host.order, rest)).factors
            groups = [
                groups[i].union(*twos[i * half:(i + 1) * half]) for i in range(count)
            ]
    return Factorization(host, tuple(groups), (n,) * count)
