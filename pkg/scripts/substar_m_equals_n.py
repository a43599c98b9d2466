"""Test the two-clique S_n^m lower bound n+2m+1 at m = n by exhaustive search.

For n = 2 (P5) and n = 3 the search finds the least N where every 2-coloring
of K_N holds a monochromatic S_n^n, and compares it with n+2m+1 = 3n+1.
n = 3 takes a few minutes with 4 workers.
"""

import argparse
import time

from starramsey.core import subdivided_star
from starramsey.search import exists_free_coloring


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--budget", type=int, default=10**9)
    args = ap.parse_args()
    for n in args.n:
        pattern = subdivided_star(n, n)
        N = pattern.vertex_count
        while True:
            t0 = time.perf_counter()
            out = exists_free_coloring(N, 2, pattern, budget=args.budget, workers=args.workers)
            print(f"{pattern} K_{N}: {out.verdict} ({out.nodes_explored} nodes, {time.perf_counter() - t0:.1f}s)")
            if out.forced:
                break
            N += 1
        print(f"r({pattern};2) = {N}; two-clique claim n+2m+1 = {3 * n + 1}")


if __name__ == "__main__":
    main()
