"""Lower-bound witness colorings, each re-verified before it is returned.

Every builder returns a :class:`WitnessCertificate` whose graph has been
checked pattern-free by the specialized detector (and by the brute-force
oracle on small orders). A construction that fails its own check raises
:class:`InternalError`; certificates are never handed out unverified.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    P4,
    ColoredCompleteGraph,
    Pattern,
    double_star,
    star,
    subdivided_star,
)
from .detect import brute_force_find, find_mono
from .factorize import (
    complete_graph,
    complete_multipartite,
    decompose_into_n_factors,
    max_matching_min_cover,
    norm,
    proper_edge_coloring_complete,
    two_factorization,
)

BRUTE_FORCE_LIMIT = 12


class ConstructionError(ValueError):
    pass


class InvalidArity(ConstructionError):
    pass


class Infeasible(ConstructionError):
    pass


class NotOddPrime(ConstructionError):
    pass


class ListSizeMismatch(ConstructionError):
    pass


class InternalError(RuntimeError):
    """A construction or proof step broke a guarantee it should have."""


@dataclass(frozen=True)
class PartitionScheme:
    A: tuple[int, ...] = ()
    B: tuple[int, ...] = ()
    V: tuple[tuple[int, ...], ...] = ()

    def part_of(self) -> dict[int, str]:
        out = {v: "A" for v in self.A}
        out.update({v: "B" for v in self.B})
        for i, block in enumerate(self.V, start=1):
            out.update({v: f"V{i}" for v in block})
        return out

    def to_dict(self) -> dict:
        return {"A": list(self.A), "B": list(self.B), "V": [list(b) for b in self.V]}

    @classmethod
    def from_dict(cls, d: dict) -> "PartitionScheme":
        return cls(tuple(d.get("A", ())), tuple(d.get("B", ())), tuple(tuple(b) for b in d.get("V", ())))


@dataclass
class WitnessCertificate:
    pattern: Pattern
    colors: int
    graph: ColoredCompleteGraph
    construction_id: str
    scheme: PartitionScheme
    verified: bool = False
    seed: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def claimed_bound(self) -> int:
        return self.graph.order + 1


def verify_free(graph: ColoredCompleteGraph, pattern: Pattern) -> bool:
    """Specialized detector always; brute-force oracle as well on small orders."""
    if find_mono(graph, pattern) is not None:
        return False
    if graph.order <= BRUTE_FORCE_LIMIT and brute_force_find(graph, pattern) is not None:
        raise InternalError(f"detector and brute force disagree on {pattern}")
    return True


def _certify(cert: WitnessCertificate) -> WitnessCertificate:
    if not verify_free(cert.graph, cert.pattern):
        raise InternalError(
            f"{cert.construction_id} produced a coloring containing a monochromatic {cert.pattern}"
        )
    cert.verified = True
    return cert


def _check_double_star(n: int, m: int, k: int) -> None:
    if not n >= m >= 1:
        raise InvalidArity(f"double star needs n >= m >= 1, got n={n}, m={m}")
    if k < 1:
        raise InvalidArity(f"k must be >= 1, got {k}")


def relabeled_odd_coloring(k: int) -> dict[tuple[int, int], int]:
    """Proper k-edge-coloring of K_k (k odd) permuted so vertex i misses color i + 1."""
    coloring, missing = proper_edge_coloring_complete(k)
    perm = {missing[v]: v + 1 for v in range(k)}
    return {e: perm[c] for e, c in coloring.items()}


def _odd_layout(k: int, part_size: int, a_size: int) -> tuple[PartitionScheme, list[int]]:
    """Blocks A (first ``a_size`` vertices) then V_1..V_k of ``part_size`` each.

    Returns the scheme and a vertex -> block map (0 for A, i for V_i).
    """
    A = tuple(range(a_size))
    V = tuple(
        tuple(range(a_size + i * part_size, a_size + (i + 1) * part_size)) for i in range(k)
    )
    block = [0] * a_size + [i + 1 for i in range(k) for _ in range(part_size)]
    return PartitionScheme(A=A, V=V), block


def _odd_k_coloring(k: int, part_size: int, a_size: int):
    """Color V_i and V_i--A with i, V_i--V_j with the relabeled proper color, A with k."""
    scheme, block = _odd_layout(k, part_size, a_size)
    order = len(block)
    if k == 1:
        return ColoredCompleteGraph.monochromatic(order, 1), scheme, block
    cross = relabeled_odd_coloring(k)

    def color_of(u: int, v: int) -> int:
        bu, bv = block[u], block[v]
        if bu == 0 and bv == 0:
            return k
        if bu == 0 or bv == 0 or bu == bv:
            return max(bu, bv)
        return cross[norm(bu - 1, bv - 1)]

    return ColoredCompleteGraph.from_function(order, k, color_of), scheme, block


def witness_double_star_odd_k(n: int, m: int, k: int) -> WitnessCertificate:
    """S(n,m)-free k-coloring of K_{kn+m+1} for odd k."""
    _check_double_star(n, m, k)
    if k % 2 == 0:
        raise InvalidArity(f"k must be odd, got {k}")
    graph, scheme, _ = _odd_k_coloring(k, n, m + 1)
    return _certify(WitnessCertificate(double_star(n, m), k, graph, "double-star-odd-k", scheme))


def witness_double_star_even_k(n: int, m: int, k: int) -> WitnessCertificate:
    """S(n,m)-free k-coloring of K_{(k-1)n+2m+1} for even k.

    The odd-k witness with k - 1 colors on A and V_1..V_{k-1}, plus a block
    B of m vertices joined to everything else in color k and colored 1
    internally.
    """
    _check_double_star(n, m, k)
    if k % 2 or k < 2:
        raise InvalidArity(f"k must be even and >= 2, got {k}")
    inner, scheme, _ = _odd_k_coloring(k - 1, n, m + 1)
    base = inner.order
    order = base + m

    def color_of(u: int, v: int) -> int:
        if v < base:
            return inner.color(u, v)
        if u >= base:
            return 1
        return k

    graph = ColoredCompleteGraph.from_function(order, k, color_of)
    scheme = PartitionScheme(A=scheme.A, B=tuple(range(base, order)), V=scheme.V)
    return _certify(WitnessCertificate(double_star(n, m), k, graph, "double-star-even-k", scheme))


def _factor_coloring(n: int, m: int, k: int, parts: int, seed: int, construction_id: str):
    size = n + m + 1
    V = tuple(tuple(range(i * size, (i + 1) * size)) for i in range(parts))
    host = complete_multipartite(V)
    fact = decompose_into_n_factors(host, n, k - 1, seed=seed)
    table: dict[tuple[int, int], int] = {}
    for i, factor in enumerate(fact.factors, start=1):
        for e in factor:
            table[e] = i
    graph = ColoredCompleteGraph.from_function(host.order, k, lambda u, v: table.get((u, v), k))
    cert = WitnessCertificate(
        double_star(n, m), k, graph, construction_id, PartitionScheme(V=V), seed=seed
    )
    return _certify(cert)


def witness_double_star_divisible(n: int, m: int, k: int, seed: int = 0) -> WitnessCertificate:
    """S(n,m)-free k-coloring of K_{kn+m+1} when (n+m+1) divides k-1.

    Parts of size n+m+1 are colored k inside; the complete multipartite
    remainder is n(k-1)-regular and is split into k-1 n-factors, factor i
    getting color i.
    """
    _check_double_star(n, m, k)
    size = n + m + 1
    if k < 2 or (k - 1) % size:
        raise InvalidArity(f"need (n+m+1) | (k-1), got n+m+1={size}, k={k}")
    if n % 2 and m % 2 == 0:
        raise InvalidArity("need n even or m odd")
    ell = (k - 1) // size
    order = k * n + m + 1
    if n % 2 and order % 2:
        raise InvalidArity(
            f"n odd needs even order for perfect matchings; K_{order} is odd (use the odd-k witness)"
        )
    return _factor_coloring(n, m, k, n * ell + 1, seed, "double-star-divisible")


def witness_double_star_half_divisible(n: int, m: int, k: int, seed: int = 0) -> WitnessCertificate:
    """S(n,m)-free k-coloring of K_{kn+m+1}, n even, m odd, (n+m+1)/2 dividing k-1."""
    _check_double_star(n, m, k)
    if n % 2 or m % 2 == 0:
        raise InvalidArity(f"need n even and m odd, got n={n}, m={m}")
    half = (n + m + 1) // 2
    if k < 2 or (k - 1) % half:
        raise InvalidArity(f"need (n+m+1)/2 | (k-1), got {half} and k={k}")
    ell = (k - 1) // half
    return _factor_coloring(n, m, k, n * ell // 2 + 1, seed, "double-star-half-divisible")


def witness_star(n: int, k: int, order: int) -> WitnessCertificate:
    """K_{1,n}-free k-coloring of K_order: every color class has max degree <= n - 1.

    Matching classes of a proper coloring of K_order are bundled n - 1 at a
    time. At order = k(n-1)+1 with odd order the classes must be exactly
    (n-1)-regular, which needs n - 1 even; there 2-factors are bundled.
    """
    if n < 1 or k < 1 or order < 1:
        raise InvalidArity("need n, k, order >= 1")
    limit = k * (n - 1) + 1
    if order > limit:
        raise Infeasible(f"order {order} > k(n-1)+1 = {limit}: a color has degree >= n")
    scheme = PartitionScheme(V=(tuple(range(order)),))
    if order == 1:
        graph = ColoredCompleteGraph.monochromatic(1, k)
        return _certify(WitnessCertificate(star(n), k, graph, "star-bundled-matchings", scheme))
    if order == limit and order % 2:
        if (n - 1) * order % 2:
            raise Infeasible(
                f"(n-1)*order = {(n - 1) * order} is odd: no (n-1)-regular class on {order} vertices"
            )
        twos = two_factorization(complete_graph(order)).factors
        per = (n - 1) // 2
        classes = [frozenset().union(*twos[i * per:(i + 1) * per]) for i in range(k)]
        cid = "star-bundled-2-factors"
    else:
        coloring, _ = proper_edge_coloring_complete(order)
        ncls = max(coloring.values())
        if n == 1 or ncls > k * (n - 1):
            raise Infeasible(f"{ncls} matching classes do not fit into {k} bundles of {n - 1}")
        classes = [set() for _ in range(k)]
        for e, c in coloring.items():
            classes[(c - 1) // (n - 1)].add(e)
        cid = "star-bundled-matchings"
    table = {e: i for i, cls in enumerate(classes, start=1) for e in cls}
    graph = ColoredCompleteGraph.from_function(order, k, lambda u, v: table[(u, v)])
    return _certify(WitnessCertificate(star(n), k, graph, cid, scheme))


def witness_substar(n: int, m: int, k: int) -> WitnessCertificate:
    """S_n^m-free k-coloring of K_{k(n-1)+m+1} for odd k.

    Same layout as the odd-k double-star witness with blocks V_i of size
    n - 1 and |A| = m + 1.
    """
    if not (n >= 2 and n >= m >= 1):
        raise InvalidArity(f"subdivided star needs n >= 2 and n >= m >= 1, got n={n}, m={m}")
    if k < 1 or k % 2 == 0:
        raise InvalidArity(f"k must be odd, got {k}")
    graph, scheme, _ = _odd_k_coloring(k, n - 1, m + 1)
    return _certify(WitnessCertificate(subdivided_star(n, m), k, graph, "substar-odd-k", scheme))


def witness_substar_2color(n: int, m: int) -> WitnessCertificate:
    """S_n^m-free 2-coloring of K_{n+2m}: red cliques on A (n+m) and B (m), blue between.

    Requires m < n; at m = n a blue copy centered in A exists.
    """
    if not (n >= 2 and n > m >= 1):
        raise InvalidArity(f"need n > m >= 1, got n={n}, m={m}")
    a = n + m
    order = n + 2 * m
    graph = ColoredCompleteGraph.from_function(order, 2, lambda u, v: 1 if (u < a) == (v < a) else 2)
    scheme = PartitionScheme(A=tuple(range(a)), B=tuple(range(a, order)))
    return _certify(WitnessCertificate(subdivided_star(n, m), 2, graph, "substar-2-color", scheme))


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def witness_list_p4(p: int, lists, budget: int = 10**7) -> ColoredCompleteGraph:
    """P4-free coloring of K_{p+2} respecting ``lists`` (a ListAssignment, all sizes p).

    Constant lists: exhaustive search for a P4-free p-coloring, relabeled
    onto the common list. Otherwise some vertex u sees at least p + 1
    distinct colors; its p + 1 edges get distinct colors (a system of
    distinct representatives), and K_{p+2} - u gets a proper list edge
    coloring, so no color class contains two adjacent edges away from u.
    """
    from .search import exists_free_coloring, list_edge_coloring

    if not (p % 2 == 1 and _is_prime(p)):
        raise NotOddPrime(f"{p} is not an odd prime")
    N = p + 2
    if lists.order != N:
        raise ListSizeMismatch(f"lists are for K_{lists.order}, need K_{N}")
    if any(len(lists[e]) != p for e in lists.edges()):
        raise ListSizeMismatch(f"every list must have exactly {p} colors")
    universe = max(max(l) for l in lists.lists.values())

    if lists.is_constant():
        palette = sorted(lists[(0, 1)])
        outcome = exists_free_coloring(N, p, P4, budget=budget)
        if outcome.coloring is None:
            raise InternalError(f"no P4-free {p}-coloring of K_{N}")
        src = outcome.coloring
        graph = ColoredCompleteGraph.from_function(N, universe, lambda u, v: palette[src.color(u, v) - 1])
    else:
        u = next(
            x for x in range(N)
            if len(set().union(*(lists[norm(x, y)] for y in range(N) if y != x))) >= p + 1
        )
        others = [y for y in range(N) if y != u]
        edges_at_u = [norm(u, y) for y in others]
        cert = max_matching_min_cover(
            [("e", e) for e in edges_at_u],
            sorted({("c", c) for e in edges_at_u for c in lists[e]}),
            [(("e", e), ("c", c)) for e in edges_at_u for c in sorted(lists[e])],
        )
        if len(cert.matching) != len(edges_at_u):
            raise InternalError("no distinct representatives for the edges at u")
        table = {left[1]: right[1] for left, right in cert.matching}
        rest = lists.restrict(others)
        sub = list_edge_coloring(len(others), rest, budget=budget)
        if sub is None:
            raise InternalError(f"K_{p + 1} not list edge colorable from lists of size {p}")
        for (i, j), c in sub.items():
            table[norm(others[i], others[j])] = c
        graph = ColoredCompleteGraph.from_function(N, universe, lambda a, b: table[(a, b)])

    for e in lists.edges():
        if graph.color(*e) not in lists[e]:
            raise InternalError(f"edge {e} colored outside its list")
    if not verify_free(graph, P4):
        raise InternalError("list coloring contains a monochromatic P4")
    return graph


BUILDERS = {
    "double-star-odd-k": witness_double_star_odd_k,
    "double-star-even-k": witness_double_star_even_k,
    "double-star-divisible": witness_double_star_divisible,
    "double-star-half-divisible": witness_double_star_half_divisible,
    "substar-odd-k": witness_substar,
    "substar-2-color": witness_substar_2color,
}


def best_double_star_witness(n: int, m: int, k: int, seed: int = 0) -> WitnessCertificate:
    """Largest verified witness among the applicable double-star constructions.

    Includes the star relaxation: a K_{1,n+1}-free coloring is S(n,m)-free.
    """
    _check_double_star(n, m, k)
    candidates = []
    attempts = [
        lambda: witness_double_star_odd_k(n, m, k),
        lambda: witness_double_star_even_k(n, m, k),
        lambda: witness_double_star_divisible(n, m, k, seed=seed),
        lambda: witness_double_star_half_divisible(n, m, k, seed=seed),
    ]
    for attempt in attempts:
        try:
            candidates.append(attempt())
        except ConstructionError:
            pass
    for order in (k * n + 1, k * n):
        try:
            s = witness_star(n + 1, k, order)
        except ConstructionError:
            continue
        cert = WitnessCertificate(double_star(n, m), k, s.graph, "double-star-via-star", s.scheme)
        candidates.append(_certify(cert))
        break
    if not candidates:
        raise InvalidArity(f"no construction applies to S({n},{m}) with k={k}")
    return max(candidates, key=lambda c: c.graph.order)


def best_substar_witness(n: int, m: int, k: int) -> WitnessCertificate:
    if not (n >= 2 and n >= m >= 1):
        raise InvalidArity(f"subdivided star needs n >= 2 and n >= m >= 1, got n={n}, m={m}")
    candidates = []
    for attempt in (lambda: witness_substar(n, m, k), lambda: witness_substar_2color(n, m) if k == 2 else None):
        try:
            c = attempt()
        except ConstructionError:
            continue
        if c is not None:
            candidates.append(c)
    for order in (k * (n - 1) + 1, k * (n - 1)):
        try:
            s = witness_star(n, k, order)
        except ConstructionError:
            continue
        cert = WitnessCertificate(subdivided_star(n, m), k, s.graph, "substar-via-star", s.scheme)
        candidates.append(_certify(cert))
        break
    if not candidates:
        raise InvalidArity(f"no construction applies to S_{n}^{m} with k={k}")
    return max(candidates, key=lambda c: c.graph.order)
