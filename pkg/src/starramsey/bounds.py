"""Closed-form Ramsey and list-Ramsey bounds for stars, P4, double stars and
subdivided stars, with provenance per entry.

Every bound is a :class:`BoundEntry`. The report's ``lower``/``upper`` are
the best *certified* entries; asymptotic main terms are kept but marked
``certified=False`` and never feed ``exact``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .core import P4, Pattern, PatternKind, double_star, star, subdivided_star
from .extract import ceil_div, check_conditions

R = "r"
R_LIST = "r_list"


@dataclass(frozen=True)
class BoundEntry:
    quantity: str  # "r" or "r_list"
    side: str  # "lower" or "upper"
    value: int
    source: str
    certified: bool = True


@dataclass
class BoundsReport:
    pattern: Pattern
    k: int
    entries: list[BoundEntry] = field(default_factory=list)
    conditions: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def add(self, side: str, value: int, source: str, *, quantity: str = R, certified: bool = True) -> None:
        self.entries.append(BoundEntry(quantity, side, int(value), source, certified))

    def exact_value(self, value: int, source: str, *, quantity: str = R) -> None:
        self.add("lower", value, source, quantity=quantity)
        self.add("upper", value, source, quantity=quantity)

    def _best(self, quantity: str, side: str) -> tuple[int | None, list[str]]:
        pool = [e for e in self.entries if e.quantity == quantity and e.side == side and e.certified]
        if not pool:
            return None, []
        pick = max if side == "lower" else min
        best = pick(e.value for e in pool)
        return best, list(dict.fromkeys(e.source for e in pool if e.value == best))

    @property
    def lower(self) -> int:
        value, _ = self._best(R, "lower")
        return value if value is not None else self.pattern.vertex_count

    @property
    def upper(self) -> int | None:
        return self._best(R, "upper")[0]

    @property
    def lower_provenance(self) -> list[str]:
        return self._best(R, "lower")[1]

    @property
    def upper_provenance(self) -> list[str]:
        return self._best(R, "upper")[1]

    @property
    def exact(self) -> int | None:
        up = self.upper
        return up if up is not None and up == self.lower else None

    @property
    def list_lower(self) -> int | None:
        return self._best(R_LIST, "lower")[0]

    @property
    def list_upper(self) -> int | None:
        return self._best(R_LIST, "upper")[0]

    @property
    def list_exact(self) -> int | None:
        lo, up = self.list_lower, self.list_upper
        return up if up is not None and up == lo else None

    def check(self) -> "BoundsReport":
        up = self.upper
        if up is not None and self.lower > up:
            raise AssertionError(f"certified lower {self.lower} exceeds upper {up} for {self.pattern}, k={self.k}")
        lu, ll = self.list_upper, self.list_lower
        if lu is not None and ll is not None and ll > lu:
            raise AssertionError(f"list lower {ll} exceeds list upper {lu}")
        return self

    def summary(self) -> str:
        if self.exact is not None:
            head = f"exact {self.exact}"
        else:
            up = self.upper
            head = f"range [{self.lower}, {up if up is not None else 'inf'}" + ("]" if up is not None else ")")
        return f"r({self.pattern}; {self.k}): {head}"

    def to_dict(self) -> dict:
        return {
            "pattern": str(self.pattern),
            "k": self.k,
            "lower": self.lower,
            "lower_provenance": self.lower_provenance,
            "upper": self.upper,
            "upper_provenance": self.upper_provenance,
            "exact": self.exact,
            "list_lower": self.list_lower,
            "list_upper": self.list_upper,
            "list_exact": self.list_exact,
            "conditions": self.conditions,
            "notes": self.notes,
            "entries": [e.__dict__ for e in self.entries],
        }


def _is_odd_prime(p: int) -> bool:
    return p >= 3 and p % 2 == 1 and all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def star_ramsey(n: int, k: int) -> int:
    """r(K_{1,n}; k): k(n-1)+1 when n and k are both even, else k(n-1)+2."""
    return k * (n - 1) + (1 if n % 2 == 0 and k % 2 == 0 else 2)


def _inherit(report: BoundsReport, other: BoundsReport, via: str) -> None:
    for e in other.entries:
        report.entries.append(BoundEntry(e.quantity, e.side, e.value, f"{e.source} [{via}]", e.certified))


def _list_from_r(report: BoundsReport) -> None:
    """r_list <= r, so every certified upper bound on r bounds r_list too."""
    for e in [e for e in report.entries if e.quantity == R and e.side == "upper" and e.certified]:
        report.add("upper", e.value, f"{e.source} (r_list <= r)", quantity=R_LIST)


def bounds_star(n: int, k: int) -> BoundsReport:
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    rep = BoundsReport(star(n), k)
    both_even = n % 2 == 0 and k % 2 == 0
    rep.conditions.update(n_even=n % 2 == 0, k_even=k % 2 == 0, k_odd_prime=_is_odd_prime(k))
    rep.add("lower", k * (n - 1) + 1, "Burr-Roberts lower bound")
    rep.add("upper", k * (n - 1) + 2, "Burr-Roberts upper bound")
    if both_even:
        rep.add("upper", k * (n - 1) + 1, "Burr-Roberts: lower bound tight when n and k are even")
    else:
        rep.add("lower", k * (n - 1) + 2, "Burr-Roberts: lower bound not tight unless n and k are even")

    rep.add("lower", (n - 1) * k + 1, "Alon-Bucic-Kalvari-Kuperwasser-Szabo list lower bound", quantity=R_LIST)
    if both_even:
        rep.add("upper", (n - 1) * k + 1, "list lower bound tight for n, k even", quantity=R_LIST)
    if _is_odd_prime(k) and n >= 2:
        rep.exact_value(k * (n - 1) + 2, "odd prime k via list edge colorings of K_{k+1}", quantity=R_LIST)
    if k == 2:
        rep.exact_value(2 * n - 1 if n % 2 == 0 else 2 * n, "two-color list stars", quantity=R_LIST)
    _list_from_r(rep)
    return rep.check()


def bounds_p4(k: int) -> BoundsReport:
    if k < 1:
        raise ValueError("need k >= 1")
    rep = BoundsReport(P4, k)
    eps = k % 3
    rep.conditions["eps (k mod 3)"] = eps
    if k == 3:
        rep.exact_value(6, "Irving: r(P4;3) = 6")
    elif eps == 1:
        rep.exact_value(2 * k + 2, "Irving, k = 1 mod 3")
    elif eps == 2:
        rep.exact_value(2 * k + 1, "Irving, k = 2 mod 3")
    else:
        rep.add("lower", 2 * k, "Irving, k = 0 mod 3 (value 2k or 2k+1)")
        rep.add("upper", 2 * k + 1, "Irving, k = 0 mod 3 (value 2k or 2k+1)")
        rep.notes.append("k = 0 mod 3: value is 2k or 2k+1; the range is kept as is")
    rep.add("lower", k + 1, "list bound via K_{1,2} inside P4", quantity=R_LIST)
    if _is_odd_prime(k):
        rep.add("lower", k + 3, "odd prime p: rainbow star plus proper list coloring of K_{p+1}", quantity=R_LIST)
    _list_from_r(rep)
    return rep.check()


def bounds_double_star(n: int, m: int, k: int) -> BoundsReport:
    if not n >= m >= 1 or k < 1:
        raise ValueError("need n >= m >= 1 and k >= 1")
    pat = double_star(n, m)
    rep = BoundsReport(pat, k)
    if k == 1:
        rep.exact_value(n + m + 2, "one color: the complete graph on n+m+2 vertices")
        return rep.check()

    cond = check_conditions(pat, k)
    rep.conditions.update(
        t=cond.t,
        counting_condition=cond["double-star-counting"],
        m1_condition=cond["double-star-m1"],
        k_odd=k % 2 == 1,
        divisible=(k - 1) % (n + m + 1) == 0,
        half_divisible=(n + m + 1) % 2 == 0 and (k - 1) % ((n + m + 1) // 2) == 0,
    )

    rep.add("lower", star_ramsey(n + 1, k), "star relaxation: K_{1,n+1} is a subgraph (Burr-Roberts value)")
    if k % 2:
        rep.add("lower", k * n + m + 2, "odd-k partition coloring with a proper coloring of K_k")
    else:
        rep.add("lower", (k - 1) * n + 2 * m + 2, "even-k partition coloring (odd-k coloring plus block B)")
    if rep.conditions["divisible"] and (n % 2 == 0 or m % 2 == 1):
        rep.add("lower", k * n + m + 2, "n-factor coloring, (n+m+1) | (k-1)")
    if n % 2 == 0 and m % 2 == 1 and rep.conditions["half_divisible"]:
        rep.add("lower", k * n + m + 2, "n-factor coloring, (n+m+1)/2 | (k-1)")

    if cond["double-star-counting"]:
        rep.add("upper", k * n + m + 2, "double counting over same-colored stars")
    if cond["double-star-m1"]:
        rep.add("upper", k * n + 3, "shared-leaf pigeonhole, m = 1 and n >= (k-1)(k-2)")
    if k == 3 and m == 1:
        rep.exact_value(3 * n + 3, "three colors, m = 1: r(S(n,1);3) = 3n+3")

    if (n, m) == (1, 1):
        _inherit(rep, bounds_p4(k), "S(1,1) = P4")

    if k == 2:
        _two_color_double_star(rep, n, m)
        rep.add("lower", star_ramsey(n + 1, 2), "two-color list stars plus star relaxation", quantity=R_LIST)
    else:
        rep.add("lower", k * n + 1, "list star bound for K_{1,n+1}", quantity=R_LIST)
        if _is_odd_prime(k):
            rep.add("lower", k * n + 2, "odd prime k list star value for K_{1,n+1}", quantity=R_LIST)

    edges = n + m + 1
    if (k - 1) % edges == 0:
        rep.add("lower", k * (edges - 1) + 2, "Erdos-Graham tree bound (k sufficiently large)", certified=False)
        rep.notes.append(
            f"Erdos-Graham: r(T;k) > k(e-1)+1 for trees with e = {edges} edges when e | (k-1) and k is large"
        )
    _list_from_r(rep)
    return rep.check()


def _two_color_double_star(rep: BoundsReport, n: int, m: int) -> None:
    if n % 2 == 1 and m <= 2:
        rep.exact_value(max(2 * n + 1, n + 2 * m + 2), "Grossman-Harary-Klawe, n odd and m <= 2")
    side = n * n <= 2 * m * m or n >= 3 * m
    rep.conditions["ghk_second_branch"] = (n % 2 == 0 or m >= 3) and side
    if rep.conditions["ghk_second_branch"]:
        rep.exact_value(max(2 * n + 2, n + 2 * m + 2), "Grossman-Harary-Klawe, n even or m >= 3, n <= sqrt2 m or n >= 3m")
    if m == 1 and n >= 2:
        rep.exact_value(2 * n + 2 - n % 2, "Grossman-Harary-Klawe, r(S(n,1);2) = 2n+2-eps, eps = n mod 2")
    if Fraction(n) <= Fraction(1699, 1000) * (m + 1):
        rep.exact_value(n + 2 * m + 2, "Norin-Sun-Zhao, n <= 1.699(m+1)")
    rep.add("lower", math.floor(Fraction(5, 6) * m + Fraction(5, 3) * n),
            "Norin-Sun-Zhao asymptotic main term (o(m) omitted)", certified=False)
    if n >= 2 * m:
        rep.add("lower", math.floor(Fraction(21, 23) * m + Fraction(189, 115) * n),
                "Norin-Sun-Zhao asymptotic main term, n >= 2m (o(m) omitted)", certified=False)


def bounds_substar(n: int, m: int, k: int) -> BoundsReport:
    if not (n >= 2 and n >= m >= 1) or k < 2:
        raise ValueError("need n >= 2, n >= m >= 1 and k >= 2")
    pat = subdivided_star(n, m)
    rep = BoundsReport(pat, k)
    cond = check_conditions(pat, k)
    eps_n1 = (n - 1) % 2
    eps_n = n % 2
    rep.conditions.update(
        t=cond.t,
        counting_condition=cond["substar-counting"],
        k_odd=k % 2 == 1,
        **{"eps (n-1 mod 2)": eps_n1, "eps (n mod 2)": eps_n},
    )

    rep.add("lower", star_ramsey(n, k), "star relaxation: K_{1,n} is a subgraph (Burr-Roberts value)")
    if k % 2:
        rep.add("lower", k * (n - 1) + m + 2, "odd-k partition coloring, blocks of size n-1")
    if cond["substar-counting"]:
        rep.add("upper", k * (n - 1) + m + 2, "Koenig cover plus double counting over same-colored stars")

    if m == 1 and n >= 2:
        inner = bounds_p4(k) if n == 2 else bounds_double_star(n - 1, 1, k)
        _inherit(rep, inner, f"S_{n}^1 = S({n - 1},1)")

    if k == 2:
        if m < n:
            rep.add("lower", n + 2 * m + 1, "two red cliques joined in blue, |A| = n+m, |B| = m")
        else:
            rep.add("lower", n + 2 * m + 1, "two red cliques joined in blue at m = n (construction has a blue copy)",
                    certified=False)
            rep.add("lower", 3 * n - 1, "two red cliques joined in blue for S_n^{n-1}, a subgraph of S_n^n")
            rep.notes.append("m = n: the two-clique coloring contains a blue S_n^n; n+2m+1 is not certified")
        rep.conditions["exceeds_star_value"] = n <= 2 * m + 1 - eps_n
        if m in (2, 3) and n >= 3 * m - 1 + eps_n1:
            rep.exact_value(star_ramsey(n, 2), "two-color case analysis for m in {2,3}, n >= 3m-1+eps")
            rep.exact_value(star_ramsey(n, 2), "two-color case analysis for m in {2,3}", quantity=R_LIST)
        rep.add("lower", star_ramsey(n, 2), "two-color list stars", quantity=R_LIST)
    else:
        rep.add("lower", k * (n - 1) + 1, "list star bound for K_{1,n}", quantity=R_LIST)
        if _is_odd_prime(k):
            rep.add("lower", k * (n - 1) + 2, "odd prime k list star value", quantity=R_LIST)
    _list_from_r(rep)
    return rep.check()


def bounds_for(pattern: Pattern, k: int) -> BoundsReport:
    if pattern.kind is PatternKind.STAR:
        return bounds_star(pattern.n, k)
    if pattern.kind is PatternKind.DOUBLE_STAR:
        return bounds_double_star(pattern.n, pattern.m, k)
    return bounds_substar(pattern.n, pattern.m, k)
