"""Exhaustive search for small Ramsey numbers, compared against the bounds calculator.

Usage: python scripts/small_ramsey_search.py [--workers W] [--out results/search.json]
"""

import argparse
import json
import time
from pathlib import Path

from starramsey.bounds import bounds_for
from starramsey.core import P4, double_star, star, subdivided_star
from starramsey.search import BudgetExhausted, ramsey_exact

CASES = [
    (star(2), 2), (star(3), 2), (star(2), 3), (P4, 2), (P4, 3), (double_star(2, 1), 2),
    (double_star(2, 2), 2), (double_star(3, 1), 2), (subdivided_star(2, 1), 2),
    (subdivided_star(3, 1), 2), (subdivided_star(3, 2), 2), (subdivided_star(2, 1), 3),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cap", type=int, default=9)
    ap.add_argument("--budget", type=int, default=5 * 10**7)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="results/search.json")
    args = ap.parse_args()

    rows = []
    print(f"{'pattern':>10} {'k':>2} {'search':>8} {'bounds':>16} {'nodes':>10} {'sec':>7}")
    for pattern, k in CASES:
        t0 = time.perf_counter()
        try:
            res = ramsey_exact(pattern, k, args.cap, budget=args.budget, workers=args.workers)
            found, nodes = res.value, res.nodes_explored
        except BudgetExhausted as exc:
            found, nodes = None, exc.nodes
        dt = time.perf_counter() - t0
        rep = bounds_for(pattern, k)
        claim = rep.summary().split(": ", 1)[1]
        agrees = found is None or (rep.lower <= found and (rep.upper is None or found <= rep.upper))
        rows.append({"pattern": str(pattern), "k": k, "search": found, "bounds": claim,
                     "consistent": agrees, "nodes": nodes, "seconds": round(dt, 3)})
        print(f"{str(pattern):>10} {k:>2} {str(found):>8} {claim:>16} {nodes:>10} {dt:>7.2f}"
              + ("" if agrees else "  <-- INCONSISTENT"))
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(rows, indent=1))
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
