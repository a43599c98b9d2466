"""Edge-colored complete graphs, target patterns and embeddings.

Colors are 1-based (``1..k``); vertices are 0-based. A coloring is stored
densely in triangular pair order, with per-color neighbor bitmasks built
once so that degree and common-neighbor queries are popcounts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid edge-color input."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class MissingEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class ColorOutOfRange(GraphError):
    pass


def pair_index(order: int, u: int, v: int) -> int:
    """Position of the unordered pair {u, v} in lexicographic pair order."""
    if u > v:
        u, v = v, u
    return u * (2 * order - u - 1) // 2 + (v - u - 1)


def all_pairs(order: int) -> Iterator[tuple[int, int]]:
    for u in range(order):
        for v in range(u + 1, order):
            yield u, v


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bits(mask: int, count: int) -> list[int]:
    out = []
    for b in bits(mask):
        if len(out) == count:
            break
        out.append(b)
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class ColoredCompleteGraph:
    """A complete graph on ``order`` vertices with a ``colors``-edge-coloring.

    Immutable after construction. Use :func:`build` for validated input from
    an edge list, or :meth:`from_function` inside constructions.
    """

    __slots__ = ("order", "colors", "_table", "_masks")

    def __init__(self, order: int, colors: int, table: Sequence[int]):
        if order < 1:
            raise GraphError(f"order must be >= 1, got {order}")
        if colors < 1:
            raise GraphError(f"colors must be >= 1, got {colors}")
        expected = order * (order - 1) // 2
        if len(table) != expected:
            raise GraphError(f"expected {expected} pair colors, got {len(table)}")
        self.order = order
        self.colors = colors
        masks = [[0] * order for _ in range(colors + 1)]
        idx = 0
        for u in range(order):
            for v in range(u + 1, order):
                c = table[idx]
                if not 1 <= c <= colors:
                    raise ColorOutOfRange(
                        f"edge {{{u},{v}}} has color {c} outside 1..{colors}", (u, v)
                    )
                masks[c][u] |= 1 << v
                masks[c][v] |= 1 << u
                idx += 1
        self._masks = tuple(tuple(row) for row in masks)
        self._table = bytes(table) if colors < 256 else tuple(table)

    @classmethod
    def from_function(
        cls, order: int, colors: int, color_of: Callable[[int, int], int]
    ) -> "ColoredCompleteGraph":
        return cls(order, colors, [color_of(u, v) for u, v in all_pairs(order)])

    @classmethod
    def monochromatic(cls, order: int, colors: int = 1, color: int = 1) -> "ColoredCompleteGraph":
        return cls(order, colors, [color] * (order * (order - 1) // 2))

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("no edge on a single vertex")
        return self._table[pair_index(self.order, u, v)]

    def neighbors_mask(self, v: int, c: int) -> int:
        return self._masks[c][v]

    def color_class(self, c: int) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks of color class ``c``."""
        return self._masks[c]

    def neighbors(self, v: int, c: int) -> list[int]:
        return list(bits(self._masks[c][v]))

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as ``(u, v, color)`` with ``u < v``, lexicographic."""
        return [(u, v, c) for (u, v), c in zip(all_pairs(self.order), self._table)]

    def table(self) -> list[int]:
        return list(self._table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredCompleteGraph):
            return NotImplemented
        return (
            self.order == other.order
            and self.colors == other.colors
            and self._table == other._table
        )

    def __hash__(self) -> int:
        return hash((self.order, self.colors, self._table))

    def __repr__(self) -> str:
        return f"ColoredCompleteGraph(order={self.order}, colors={self.colors})"


def build(order: int, colors: int, edge_colors: Iterable[tuple[int, int, int]]) -> ColoredCompleteGraph:
    """Validate an edge list covering every pair exactly once and build the graph."""
    if order < 1 or colors < 1:
        raise GraphError(f"need order >= 1 and colors >= 1, got {order}, {colors}")
    table = [0] * (order * (order - 1) // 2)
    for u, v, c in edge_colors:
        if u == v or not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"invalid pair {{{u},{v}}} for order {order}", (u, v))
        a, b = min(u, v), max(u, v)
        i = pair_index(order, a, b)
        if table[i]:
            raise DuplicateEdge(f"edge {{{a},{b}}} listed twice", (a, b))
        if not 1 <= c <= colors:
            raise ColorOutOfRange(f"edge {{{a},{b}}} has color {c} outside 1..{colors}", (a, b))
        table[i] = c
    for (u, v), c in zip(all_pairs(order), table):
        if not c:
            raise MissingEdge(f"edge {{{u},{v}}} has no color", (u, v))
    return ColoredCompleteGraph(order, colors, table)


def color_degree(G: ColoredCompleteGraph, v: int, c: int) -> int:
    return popcount(G.neighbors_mask(v, c))


def common_color_neighbors(G: ColoredCompleteGraph, u: int, v: int, c: int) -> set[int]:
    if u == v:
        raise ValueError("u and v must differ")
    both = G.neighbors_mask(u, c) & G.neighbors_mask(v, c)
    both &= ~((1 << u) | (1 << v))
    return set(bits(both))


class PatternKind(str, enum.Enum):
    STAR = "star"
    DOUBLE_STAR = "double-star"
    SUBDIVIDED_STAR = "substar"


@dataclass(frozen=True)
class Pattern:
    """Target graph: Star(n), DoubleStar(n, m) or SubdividedStar(n, m).

    Pattern vertices are numbered canonically: centers first, then leaves,
    then subdivision vertices.

    * Star(n): center 0, leaves 1..n.
    * DoubleStar(n, m): centers 0 (n leaves) and 1 (m leaves); leaves of 0
      are 2..n+1, leaves of 1 are n+2..n+m+1.
    * SubdividedStar(n, m): center 0, leaves 1..n, subdivision vertex
      n+i hangs off leaf i for i = 1..m.
    """

    kind: PatternKind
    n: int
    m: int = 0

    def __post_init__(self) -> None:
        kind = PatternKind(self.kind)
        object.__setattr__(self, "kind", kind)
        n, m = self.n, self.m
        if kind is PatternKind.STAR:
            ok = n >= 1 and m == 0
        elif kind is PatternKind.DOUBLE_STAR:
            ok = n >= m >= 1
        else:
            ok = n >= 2 and n >= m >= 1
        if not ok:
            raise ValueError(f"invalid arities for {kind.value}: n={n}, m={m}")

    @property
    def vertex_count(self) -> int:
        if self.kind is PatternKind.STAR:
            return self.n + 1
        if self.kind is PatternKind.DOUBLE_STAR:
            return self.n + self.m + 2
        return self.n + self.m + 1

    def edges(self) -> list[tuple[int, int]]:
        n, m = self.n, self.m
        if self.kind is PatternKind.STAR:
            return [(0, i) for i in range(1, n + 1)]
        if self.kind is PatternKind.DOUBLE_STAR:
            return (
                [(0, 1)]
                + [(0, i) for i in range(2, n + 2)]
                + [(1, i) for i in range(n + 2, n + m + 2)]
            )
        return [(0, i) for i in range(1, n + 1)] + [(i, n + i) for i in range(1, m + 1)]

    def __str__(self) -> str:
        if self.kind is PatternKind.STAR:
            return f"K_1,{self.n}"
        if self.kind is PatternKind.DOUBLE_STAR:
            return f"S({self.n},{self.m})"
        return f"S_{self.n}^{self.m}"


def star(n: int) -> Pattern:
    return Pattern(PatternKind.STAR, n)


def double_star(n: int, m: int) -> Pattern:
    return Pattern(PatternKind.DOUBLE_STAR, n, m)


def subdivided_star(n: int, m: int) -> Pattern:
    return Pattern(PatternKind.SUBDIVIDED_STAR, n, m)


P4 = double_star(1, 1)


@dataclass(frozen=True)
class Embedding:
    """A monochromatic copy: ``vertex_map[i]`` is the host vertex of pattern vertex ``i``."""

    color: int
    pattern: Pattern
    vertex_map: tuple[int, ...]

    def host_edges(self) -> list[tuple[int, int]]:
        vm = self.vertex_map
        return [(vm[a], vm[b]) for a, b in self.pattern.edges()]

    @property
    def centers(self) -> tuple[int, ...]:
        k = 2 if self.pattern.kind is PatternKind.DOUBLE_STAR else 1
        return self.vertex_map[:k]

    def to_dict(self) -> dict:
        return {
            "color": self.color,
            "pattern": pattern_to_dict(self.pattern),
            "vertex_map": list(self.vertex_map),
            "edges": [list(e) for e in self.host_edges()],
        }


def embed_double_star(color: int, u: int, v: int, u_leaves: Sequence[int], v_leaves: Sequence[int]) -> Embedding:
    pat = double_star(len(u_leaves), len(v_leaves))
    return Embedding(color, pat, (u, v, *u_leaves, *v_leaves))


def embed_subdivided_star(
    color: int, center: int, leaves: Sequence[int], subdivisions: Sequence[int]
) -> Embedding:
    """``subdivisions[i]`` hangs off ``leaves[i]``; remaining leaves are plain."""
    pat = subdivided_star(len(leaves), len(subdivisions))
    return Embedding(color, pat, (center, *leaves, *subdivisions))


def embed_star(color: int, center: int, leaves: Sequence[int]) -> Embedding:
    return Embedding(color, star(len(leaves)), (center, *leaves))


@dataclass(frozen=True)
class EmbeddingCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_embedding(G: ColoredCompleteGraph, e: Embedding) -> EmbeddingCheck:
    """Re-check injectivity and edge colors of an embedding against ``G``."""
    vm = e.vertex_map
    if len(vm) != e.pattern.vertex_count:
        return EmbeddingCheck(False, "WrongSize")
    if any(not 0 <= x < G.order for x in vm):
        return EmbeddingCheck(False, "VertexOutOfRange")
    if len(set(vm)) != len(vm):
        return EmbeddingCheck(False, "NotInjective")
    if not 1 <= e.color <= G.colors:
        return EmbeddingCheck(False, "ColorOutOfRange")
    for a, b in e.host_edges():
        if G.color(a, b) != e.color:
            return EmbeddingCheck(False, "WrongColor")
    return EmbeddingCheck(True)


def pattern_to_dict(p: Pattern) -> dict:
    d = {"kind": p.kind.value, "n": p.n}
    if p.kind is not PatternKind.STAR:
        d["m"] = p.m
    return d


def pattern_from_dict(d: dict) -> Pattern:
    return Pattern(PatternKind(d["kind"]), int(d["n"]), int(d.get("m", 0)))
