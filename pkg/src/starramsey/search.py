"""Exhaustive search: pattern-free colorings, exact small Ramsey numbers,
proper list edge colorings and tiny list-Ramsey checks.

Edges are branched in lexicographic pair order. A branch is cut as soon as
the color class touched by the newest edge contains the pattern through
that edge. With ``symmetry=True`` color i + 1 may only appear after color
i has, which removes color permutations when all edges share one palette.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .construct import InternalError
from .core import (
    ColoredCompleteGraph,
    Pattern,
    PatternKind,
    all_pairs,
    bits,
    popcount,
)
from .detect import double_star_at, find_mono, substar_at
from .factorize import norm


class BudgetExhausted(RuntimeError):
    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


@dataclass(frozen=True)
class ListAssignment:
    """A color list per edge of K_order, keyed by ``(u, v)`` with ``u < v``."""

    order: int
    lists: dict[tuple[int, int], frozenset[int]]

    def __post_init__(self) -> None:
        expected = set(all_pairs(self.order))
        if set(self.lists) != expected:
            raise ValueError("lists must cover every edge of the complete graph exactly")
        sizes = {len(l) for l in self.lists.values()}
        if len(sizes) > 1:
            raise ValueError(f"lists are not of uniform size: {sorted(sizes)}")
        if any(c < 1 for l in self.lists.values() for c in l):
            raise ValueError("colors must be positive integers")

    @classmethod
    def constant(cls, order: int, colors: Iterable[int]) -> "ListAssignment":
        palette = frozenset(colors)
        return cls(order, {e: palette for e in all_pairs(order)})

    @classmethod
    def random(cls, order: int, size: int, universe: int, rng: random.Random) -> "ListAssignment":
        pool = range(1, universe + 1)
        return cls(order, {e: frozenset(rng.sample(pool, size)) for e in all_pairs(order)})

    @property
    def size(self) -> int:
        return len(next(iter(self.lists.values()))) if self.lists else 0

    def __getitem__(self, e: tuple[int, int]) -> frozenset[int]:
        return self.lists[norm(*e)]

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.lists)

    def is_constant(self) -> bool:
        return len(set(self.lists.values())) <= 1

    def universe(self) -> int:
        return max((max(l) for l in self.lists.values()), default=1)

    def restrict(self, vertices: Sequence[int]) -> "ListAssignment":
        """Lists of the induced K on ``vertices``, relabeled 0..len-1 in the given order."""
        return ListAssignment(
            len(vertices),
            {(i, j): self[(vertices[i], vertices[j])] for i, j in all_pairs(len(vertices))},
        )


@dataclass
class SearchOutcome:
    verdict: str  # "free" or "forced"
    coloring: ColoredCompleteGraph | None
    nodes_explored: int
    elapsed: float

    @property
    def forced(self) -> bool:
        return self.verdict == "forced"


@dataclass
class RamseyResult:
    pattern: Pattern
    colors: int
    value: int | None
    lower_bound: int
    witness: ColoredCompleteGraph | None
    outcomes: dict[int, SearchOutcome] = field(default_factory=dict)

    @property
    def nodes_explored(self) -> int:
        return sum(o.nodes_explored for o in self.outcomes.values())


# -- incremental pattern test ------------------------------------------------


def touches_pattern(pattern: Pattern, adj: Sequence[int], u: int, v: int) -> bool:
    """Whether the color class ``adj`` holds a copy of ``pattern`` through edge uv."""
    n, m = pattern.n, pattern.m
    if pattern.kind is PatternKind.STAR:
        return popcount(adj[u]) >= n or popcount(adj[v]) >= n
    if pattern.kind is PatternKind.DOUBLE_STAR:
        pairs = [(u, v)]
        for x in (u, v):
            pairs.extend((x, w) for w in bits(adj[x]))
        for a, b in pairs:
            if double_star_at(adj, a, b, n, m) or double_star_at(adj, b, a, n, m):
                return True
        return False
    centers = adj[u] | adj[v] | (1 << u) | (1 << v)
    return any(substar_at(adj, x, n, m) for x in bits(centers))


class _Engine:
    def __init__(self, order: int, choices: Sequence[Sequence[int]], pattern: Pattern,
                 symmetry: bool, budget: int):
        self.order = order
        self.edges = list(all_pairs(order))
        self.choices = choices
        self.pattern = pattern
        self.symmetry = symmetry
        self.budget = budget
        ncol = max((max(c) for c in choices), default=1)
        self.adj = [[0] * order for _ in range(ncol + 1)]
        self.assignment = [0] * len(self.edges)
        self.nodes = 0

    def place(self, i: int, c: int) -> bool:
        """Color edge i with c; False (and undone) if that completes the pattern."""
        u, v = self.edges[i]
        a = self.adj[c]
        a[u] |= 1 << v
        a[v] |= 1 << u
        if touches_pattern(self.pattern, a, u, v):
            a[u] &= ~(1 << v)
            a[v] &= ~(1 << u)
            return False
        self.assignment[i] = c
        return True

    def unplace(self, i: int) -> None:
        u, v = self.edges[i]
        a = self.adj[self.assignment[i]]
        a[u] &= ~(1 << v)
        a[v] &= ~(1 << u)
        self.assignment[i] = 0

    def run(self, start: int, maxc: int) -> bool:
        if start == len(self.edges):
            return True
        for c in self.choices[start]:
            if self.symmetry and c > maxc + 1:
                break
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExhausted(f"node budget {self.budget} exhausted", self.nodes)
            if self.place(start, c):
                if self.run(start + 1, max(maxc, c)):
                    return True
                self.unplace(start)
        return False

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """Pattern-free colorings of the first ``depth`` edges, in branching order."""
        out: list[tuple[int, ...]] = []

        def walk(i: int, maxc: int, acc: list[int]) -> None:
            if i == depth:
                out.append(tuple(acc))
                return
            for c in self.choices[i]:
                if self.symmetry and c > maxc + 1:
                    break
                if self.place(i, c):
                    acc.append(c)
                    walk(i + 1, max(maxc, c), acc)
                    acc.pop()
                    self.unplace(i)

        walk(0, 0, [])
        return out


def _run_prefix(args):
    order, choices, pattern, symmetry, budget, prefix = args
    eng = _Engine(order, choices, pattern, symmetry, budget)
    maxc = 0
    for i, c in enumerate(prefix):
        if not eng.place(i, c):
            return False, None, eng.nodes
        maxc = max(maxc, c)
    try:
        ok = eng.run(len(prefix), maxc)
    except BudgetExhausted as exc:
        return None, None, exc.nodes
    return ok, (list(eng.assignment) if ok else None), eng.nodes


def _search(order: int, choices: Sequence[Sequence[int]], pattern: Pattern, symmetry: bool,
            budget: int, workers: int) -> tuple[list[int] | None, int]:
    E = order * (order - 1) // 2
    if workers <= 1 or E < 4:
        eng = _Engine(order, choices, pattern, symmetry, budget)
        ok = eng.run(0, 0)
        return (list(eng.assignment) if ok else None), eng.nodes
    depth = min(E - 1, 4)
    prefixes = _Engine(order, choices, pattern, symmetry, budget).prefixes(depth)
    tasks = [(order, choices, pattern, symmetry, budget, p) for p in prefixes]
    total = 0
    exhausted = False
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves prefix order, so the first free prefix equals the sequential answer
        for ok, assignment, nodes in pool.map(_run_prefix, tasks):
            total += nodes
            if ok is None:
                exhausted = True
            elif ok and not exhausted:
                pool.shutdown(wait=False, cancel_futures=True)
                return assignment, total
    if exhausted:
        raise BudgetExhausted(f"per-worker node budget {budget} exhausted", total)
    return None, total


def exists_free_coloring(N: int, k: int, pattern: Pattern, budget: int = 10**8,
                         symmetry: bool = True, workers: int = 1) -> SearchOutcome:
    """Decide whether some k-coloring of K_N has no monochromatic ``pattern``."""
    if N < 1 or k < 1:
        raise ValueError("need N >= 1 and k >= 1")
    t0 = time.perf_counter()
    E = N * (N - 1) // 2
    choices = [list(range(1, k + 1))] * E
    assignment, nodes = _search(N, choices, pattern, symmetry, budget, workers)
    elapsed = time.perf_counter() - t0
    if assignment is None:
        return SearchOutcome("forced", None, nodes, elapsed)
    graph = ColoredCompleteGraph(N, k, assignment)
    if find_mono(graph, pattern) is not None:
        raise InternalError("search returned a coloring that contains the pattern")
    return SearchOutcome("free", graph, nodes, elapsed)


def ramsey_exact(pattern: Pattern, k: int, N_cap: int, budget: int = 10**8,
                 symmetry: bool = True, workers: int = 1) -> RamseyResult:
    """Least N <= N_cap at which every k-coloring of K_N is forced.

    ``value`` is None when no such N was found; ``lower_bound`` is then
    N_cap + 1.
    """
    result = RamseyResult(pattern, k, None, 1, None)
    for N in range(1, N_cap + 1):
        out = exists_free_coloring(N, k, pattern, budget=budget, symmetry=symmetry, workers=workers)
        result.outcomes[N] = out
        if out.forced:
            result.value = N
            result.lower_bound = N
            return result
        result.witness = out.coloring
        result.lower_bound = N + 1
    return result


def list_edge_coloring(q: int, lists: ListAssignment, budget: int = 10**7) -> dict[tuple[int, int], int] | None:
    """Proper edge coloring of K_q with every edge colored from its list.

    Backtracking on the most constrained uncolored edge. Returns None when
    no such coloring exists.
    """
    if lists.order != q:
        raise ValueError(f"lists are for K_{lists.order}, not K_{q}")
    edges = lists.edges()
    used: list[set[int]] = [set() for _ in range(q)]
    colored: dict[tuple[int, int], int] = {}
    nodes = 0

    def solve() -> bool:
        nonlocal nodes
        if len(colored) == len(edges):
            return True
        best = None
        best_opts: list[int] = []
        for e in edges:
            if e in colored:
                continue
            opts = sorted(lists[e] - used[e[0]] - used[e[1]])
            if best is None or len(opts) < len(best_opts):
                best, best_opts = e, opts
                if not opts:
                    return False
        u, v = best
        for c in best_opts:
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted(f"node budget {budget} exhausted", nodes)
            colored[best] = c
            used[u].add(c)
            used[v].add(c)
            if solve():
                return True
            del colored[best]
            used[u].discard(c)
            used[v].discard(c)
        return False

    return dict(colored) if solve() else None


@dataclass
class ListRamseyOutcome:
    forced: bool
    coloring: ColoredCompleteGraph | None
    nodes_explored: int

    @property
    def verdict(self) -> str:
        return "ForcedForL" if self.forced else "FreeColoringFound"


def list_ramsey_check(N: int, lists: ListAssignment, pattern: Pattern, budget: int = 10**8) -> ListRamseyOutcome:
    """Decide whether every L-coloring of K_N contains a monochromatic ``pattern``.

    Color-permutation symmetry is used only when L is constant.
    """
    if lists.order != N:
        raise ValueError(f"lists are for K_{lists.order}, not K_{N}")
    constant = lists.is_constant()
    if constant and lists.lists:
        palette = sorted(next(iter(lists.lists.values())))
        choices = [list(range(1, len(palette) + 1))] * len(lists.lists)
    else:
        choices = [sorted(lists[e]) for e in all_pairs(N)]
    assignment, nodes = _search(N, choices, pattern, constant, budget, 1)
    if assignment is None:
        return ListRamseyOutcome(True, None, nodes)
    if constant and lists.lists:
        assignment = [palette[c - 1] for c in assignment]
    graph = ColoredCompleteGraph(N, lists.universe(), assignment)
    if find_mono(graph, pattern) is not None:
        raise InternalError("list search returned a coloring that contains the pattern")
    return ListRamseyOutcome(False, graph, nodes)
