"""Extractors that follow the upper-bound arguments step by step.

Given a k-coloring of a complete graph at the upper-bound order, each
extractor returns a monochromatic copy by running the counting argument:
find a big monochromatic star, try to finish directly, otherwise collect
same-colored stars hanging off its leaves and double count their leaves.
If a guaranteed step fails, :class:`InternalError` is raised; there is
deliberately no fallback to the exact detectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .construct import InternalError
from .core import (
    ColoredCompleteGraph,
    Embedding,
    Pattern,
    PatternKind,
    bits,
    embed_double_star,
    embed_subdivided_star,
    lowest_bits,
    mask_of,
    popcount,
    validate_embedding,
)
from .factorize import max_matching_min_cover


class HypothesisViolated(ValueError):
    pass


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class ConditionReport:
    pattern: Pattern
    k: int
    t: int | None
    holds: dict[str, bool]

    def __getitem__(self, key: str) -> bool:
        return self.holds.get(key, False)


def check_conditions(pattern: Pattern, k: int) -> ConditionReport:
    """Evaluate the hypotheses of the upper-bound arguments for ``pattern`` and k.

    * ``double-star-counting``: (n+1) * ceil((n+1)/(k-1)) > m((k-1)n + m)
    * ``double-star-m1``: m = 1, k >= 3, n >= (k-1)(k-2)
    * ``substar-counting``: t > m and n t > (t-m)(m-1)t + m((n-1)(k-1)+m)
      with t = ceil((n-m+1)/(k-1))
    """
    n, m = pattern.n, pattern.m
    holds: dict[str, bool] = {}
    t = None
    if k >= 2 and pattern.kind is PatternKind.DOUBLE_STAR:
        t = ceil_div(n + 1, k - 1)
        holds["double-star-counting"] = (n + 1) * t > m * ((k - 1) * n + m)
        holds["double-star-m1"] = m == 1 and k >= 3 and n >= (k - 1) * (k - 2)
    elif k >= 2 and pattern.kind is PatternKind.SUBDIVIDED_STAR:
        t = ceil_div(n - m + 1, k - 1)
        holds["substar-counting"] = t > m and n * t > (t - m) * (m - 1) * t + m * ((n - 1) * (k - 1) + m)
    return ConditionReport(pattern, k, t, holds)


@dataclass
class LeafFamily:
    """Leaf sets of same-colored stars and the incidence count p(x) over a ground set."""

    members: list[frozenset[int]]
    ground: frozenset[int]
    counts: dict[int, int] = field(init=False)

    def __post_init__(self) -> None:
        self.counts = {x: sum(x in L for L in self.members) for x in sorted(self.ground)}
        if sum(self.counts.values()) != sum(len(L) for L in self.members):
            raise InternalError("incidence count mismatch: some leaf lies outside the ground set")

    def p(self, x: int) -> int:
        return self.counts[x]

    def to_dict(self) -> dict:
        return {
            "members": [sorted(L) for L in self.members],
            "counts": {str(x): c for x, c in self.counts.items()},
            "sum_p": sum(self.counts.values()),
            "sum_sizes": sum(len(L) for L in self.members),
        }


@dataclass
class ProofTrace:
    """Step log of one extraction, for explain output and debugging."""

    steps: list[tuple[str, dict[str, Any]]] = field(default_factory=list)
    families: list[LeafFamily] = field(default_factory=list)
    relabel: dict[int, int] | None = None

    def log(self, step: str, **data: Any) -> None:
        self.steps.append((step, data))

    def lines(self) -> list[str]:
        out = []
        for step, data in self.steps:
            detail = ", ".join(f"{k}={v}" for k, v in data.items())
            out.append(f"{step}: {detail}" if detail else step)
        return out

    def to_dict(self) -> dict:
        return {
            "steps": [{"step": s, **{k: _jsonable(v) for k, v in d.items()}} for s, d in self.steps],
            "families": [f.to_dict() for f in self.families],
            "relabel": {str(k): v for k, v in (self.relabel or {}).items()},
        }


def _jsonable(v: Any) -> Any:
    if isinstance(v, (set, frozenset)):
        return sorted(v)
    if isinstance(v, tuple):
        return list(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def _color_relabel(blue: int, k: int) -> dict[int, int]:
    """Permutation sending the star's color to k (the 'blue' of the argument)."""
    perm = {c: c for c in range(1, k + 1)}
    perm[blue], perm[k] = k, blue
    return perm


def _first_mono_star(G: ColoredCompleteGraph, size: int, centers=None):
    for v in (range(G.order) if centers is None else centers):
        for c in range(1, G.colors + 1):
            if popcount(G.neighbors_mask(v, c)) >= size:
                return v, c
    return None


def _star_into(G: ColoredCompleteGraph, a: int, ground: int, size: int, skip: int):
    """Lowest color (other than ``skip``) with >= ``size`` neighbors of ``a`` inside ``ground``."""
    for c in range(1, G.colors + 1):
        if c == skip:
            continue
        nb = G.neighbors_mask(a, c) & ground
        if popcount(nb) >= size:
            return c, frozenset(lowest_bits(nb, size))
    return None


def _checked(G: ColoredCompleteGraph, e: Embedding) -> Embedding:
    check = validate_embedding(G, e)
    if not check:
        raise InternalError(f"assembled copy is invalid: {check.reason}")
    return e


def _pick_color_class(stars: dict[int, tuple[int, frozenset[int]]], t: int, order_of: list[int]):
    """Lowest color owning >= t of the stars; returns it and its first t centers."""
    by_color: dict[int, list[int]] = {}
    for a in order_of:
        by_color.setdefault(stars[a][0], []).append(a)
    for c in sorted(by_color):
        if len(by_color[c]) >= t:
            return c, by_color[c][:t]
    raise InternalError(f"pigeonhole failed: no color holds {t} stars")


def extract_double_star(G: ColoredCompleteGraph, n: int, m: int, trace: ProofTrace | None = None) -> Embedding:
    """Monochromatic S(n,m) in a k-colored K_{kn+m+2} under the counting hypothesis."""
    k = G.colors
    if not n >= m >= 1:
        raise HypothesisViolated("need n >= m >= 1")
    if G.order != k * n + m + 2:
        raise HypothesisViolated(f"order {G.order} != kn+m+2 = {k * n + m + 2}")
    if k < 2 or not check_conditions(Pattern(PatternKind.DOUBLE_STAR, n, m), k)["double-star-counting"]:
        raise HypothesisViolated(f"(n+1)ceil((n+1)/(k-1)) > m((k-1)n+m) fails for n={n}, m={m}, k={k}")
    trace = trace if trace is not None else ProofTrace()
    found = _first_mono_star(G, n + 1)
    if found is None:
        raise InternalError("no monochromatic K_{1,n+1} despite pigeonhole")
    w, blue = found
    A = lowest_bits(G.neighbors_mask(w, blue), n + 1)
    B_mask = ((1 << G.order) - 1) & ~mask_of(A) & ~(1 << w)
    trace.relabel = _color_relabel(blue, k)
    trace.log("star", center=w, color=blue, leaves=A)

    for a in A:
        extra = G.neighbors_mask(a, blue) & B_mask
        if popcount(extra) >= m:
            leaves = [x for x in A if x != a]
            trace.log("direct", center=a, leaves=lowest_bits(extra, m))
            return _checked(G, embed_double_star(blue, w, a, leaves, lowest_bits(extra, m)))

    t = ceil_div(n + 1, k - 1)
    stars = {}
    for a in A:
        s = _star_into(G, a, B_mask, n + 1, blue)
        if s is None:
            raise InternalError(f"leaf {a} has no monochromatic K_1,{n + 1} into B")
        stars[a] = s
    red, centers = _pick_color_class(stars, t, A)
    family = LeafFamily([stars[a][1] for a in centers], frozenset(bits(B_mask)))
    trace.families.append(family)
    trace.log("family", color=red, centers=centers, t=t)
    b_star = max(sorted(family.counts), key=lambda b: (family.counts[b], -b))
    p_max = family.counts[b_star]
    trace.log("max-incidence", b=b_star, p=p_max)
    if p_max < m + 1:
        raise InternalError(f"max incidence {p_max} < m+1 = {m + 1}")
    holders = [a for a in centers if b_star in stars[a][1]][: m + 1]
    *attached, hub = holders
    hub_leaves = sorted(stars[hub][1] - {b_star})
    trace.log("assemble", hub=hub, second_center=b_star, attached=attached)
    return _checked(G, embed_double_star(red, hub, b_star, hub_leaves, attached))


def extract_double_star_m1(G: ColoredCompleteGraph, n: int, k: int | None = None,
                           trace: ProofTrace | None = None) -> Embedding:
    """Monochromatic S(n,1) in a k-colored K_{kn+3} when k >= 3 and n >= (k-1)(k-2).

    Star at vertex 0; if no leaf has an edge of the star's color into the
    rest, k - 1 same-colored stars on the leaves must share a leaf.
    """
    k = G.colors if k is None else k
    if k != G.colors:
        raise HypothesisViolated(f"graph uses {G.colors} colors, not {k}")
    if k < 3 or n < (k - 1) * (k - 2) or n < 1:
        raise HypothesisViolated(f"need k >= 3 and n >= (k-1)(k-2), got n={n}, k={k}")
    if G.order != k * n + 3:
        raise HypothesisViolated(f"order {G.order} != kn+3 = {k * n + 3}")
    trace = trace if trace is not None else ProofTrace()
    v = 0
    found = _first_mono_star(G, n + 1, centers=[v])
    if found is None:
        raise InternalError("vertex 0 has no monochromatic K_{1,n+1}")
    _, blue = found
    A = lowest_bits(G.neighbors_mask(v, blue), n + 1)
    B_mask = ((1 << G.order) - 1) & ~mask_of(A) & ~(1 << v)
    trace.relabel = _color_relabel(blue, k)
    trace.log("star", center=v, color=blue, leaves=A)
    for a in A:
        extra = G.neighbors_mask(a, blue) & B_mask
        if extra:
            b = lowest_bits(extra, 1)
            trace.log("direct", center=a, leaves=b)
            return _checked(G, embed_double_star(blue, v, a, [x for x in A if x != a], b))
    stars = {}
    for a in A:
        s = _star_into(G, a, B_mask, n + 1, blue)
        if s is None:
            raise InternalError(f"leaf {a} has no monochromatic K_1,{n + 1} into B")
        stars[a] = s
    red, centers = _pick_color_class(stars, k - 1, A)
    family = LeafFamily([stars[a][1] for a in centers], frozenset(bits(B_mask)))
    trace.families.append(family)
    trace.log("family", color=red, centers=centers)
    shared = [b for b, p in family.counts.items() if p >= 2]
    if not shared:
        raise InternalError("k-1 stars with n+1 leaves each in B share no leaf")
    b = shared[0]
    hub, other = [a for a in centers if b in stars[a][1]][:2]
    trace.log("assemble", hub=hub, shared_leaf=b, attached=other)
    return _checked(G, embed_double_star(red, hub, b, sorted(stars[hub][1] - {b}), [other]))


def extract_subdivided_star(G: ColoredCompleteGraph, n: int, m: int, k: int | None = None,
                            trace: ProofTrace | None = None) -> Embedding:
    """Monochromatic S_n^m in a k-colored K_{k(n-1)+m+2} under the counting hypothesis.

    Blue star K_{1,n} with leaves A; if the blue A-B graph has a matching of
    size m the copy is immediate. Otherwise a König cover C of size <= m-1
    leaves A' x B' free of blue, stars from A' into B' are collected, and
    the incidence count yields a leaf set with m heavily shared leaves.
    """
    k = G.colors if k is None else k
    if k != G.colors:
        raise HypothesisViolated(f"graph uses {G.colors} colors, not {k}")
    if not (n >= 2 and n >= m >= 1):
        raise HypothesisViolated("need n >= 2 and n >= m >= 1")
    if G.order != k * (n - 1) + m + 2:
        raise HypothesisViolated(f"order {G.order} != k(n-1)+m+2 = {k * (n - 1) + m + 2}")
    cond = check_conditions(Pattern(PatternKind.SUBDIVIDED_STAR, n, m), k)
    if not cond["substar-counting"]:
        raise HypothesisViolated(
            f"t > m and nt > (t-m)(m-1)t + m((n-1)(k-1)+m) fail for n={n}, m={m}, k={k} (t={cond.t})"
        )
    t = cond.t
    trace = trace if trace is not None else ProofTrace()
    found = _first_mono_star(G, n)
    if found is None:
        raise InternalError("no monochromatic K_{1,n} despite pigeonhole")
    w, blue = found
    A = lowest_bits(G.neighbors_mask(w, blue), n)
    B = [x for x in range(G.order) if x != w and x not in A]
    B_mask = mask_of(B)
    trace.relabel = _color_relabel(blue, k)
    trace.log("star", center=w, color=blue, leaves=A)

    blue_edges = [(a, b) for a in A for b in bits(G.neighbors_mask(a, blue) & B_mask)]
    cert = max_matching_min_cover(A, B, blue_edges)
    trace.log("blue-matching", size=len(cert.matching), cover=sorted(cert.cover))
    if len(cert.matching) >= m:
        pairs = sorted(cert.matching)[:m]
        sub_leaves = [a for a, _ in pairs]
        plain = [a for a in A if a not in sub_leaves]
        return _checked(G, embed_subdivided_star(blue, w, sub_leaves + plain, [b for _, b in pairs]))

    if len(cert.cover) > m - 1:
        raise InternalError(f"cover of size {len(cert.cover)} exceeds m-1")
    A1 = [a for a in A if a not in cert.cover]
    B1_mask = B_mask & ~mask_of(cert.cover)
    chosen = A1[: n - m + 1]
    stars = {}
    for a in chosen:
        if G.neighbors_mask(a, blue) & B1_mask:
            raise InternalError("blue edge between A' and B' survived the cover")
        s = _star_into(G, a, B1_mask, n, blue)
        if s is None:
            raise InternalError(f"leaf {a} has no monochromatic K_1,{n} into B'")
        stars[a] = s
    red, centers = _pick_color_class(stars, t, chosen)
    family = LeafFamily([stars[a][1] for a in centers], frozenset(bits(B1_mask)))
    trace.families.append(family)
    if sum(family.counts.values()) != n * t:
        raise InternalError("leaf incidences do not sum to n t")
    heavy = [frozenset(x for x in L if family.p(x) >= m + 1) for L in family.members]
    trace.log("family", color=red, centers=centers, t=t, heavy_sizes=[len(h) for h in heavy])
    j = next((i for i, h in enumerate(heavy) if len(h) >= m), None)
    if j is None:
        raise InternalError("no leaf set with m leaves of incidence >= m+1")
    hub = centers[j]
    bs = sorted(heavy[j])[:m]
    taken: set[int] = set()
    zs = []
    for b in bs:
        z = next((a for i, a in enumerate(centers) if i != j and a not in taken and b in family.members[i]), None)
        if z is None:
            raise InternalError(f"leaf {b} cannot be routed to a fresh star center")
        taken.add(z)
        zs.append(z)
    plain = sorted(stars[hub][1] - set(bs))
    trace.log("assemble", hub=hub, subdivided=bs, attached=zs)
    return _checked(G, embed_subdivided_star(red, hub, bs + plain, zs))
