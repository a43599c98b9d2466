"""Run the proof-following extractors on many random colorings and tally which proof branch finished.

Near-witness colorings (a witness plus one random vertex) are mixed in to reach
the deeper branches that random colorings almost never need.
"""

import argparse
import json
import random
import time
from collections import Counter
from pathlib import Path

from starramsey.construct import witness_double_star_odd_k, witness_substar
from starramsey.core import ColoredCompleteGraph, validate_embedding
from starramsey.extract import ProofTrace, extract_double_star, extract_double_star_m1, extract_subdivided_star


def random_coloring(order, k, rnd):
    return ColoredCompleteGraph(order, k, [rnd.randint(1, k) for _ in range(order * (order - 1) // 2)])


def near_witness(W, rnd):
    ext = [rnd.randint(1, W.colors) for _ in range(W.order)]
    return ColoredCompleteGraph.from_function(
        W.order + 1, W.colors, lambda a, b: ext[a] if b == W.order else W.color(a, b))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--near-fraction", type=float, default=0.0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="results/extractors.json")
    args = ap.parse_args()

    jobs = [
        ("S(3,1) in K_12", 12, witness_double_star_odd_k(3, 1, 3).graph, lambda G, t: extract_double_star(G, 3, 1, t)),
        ("S(2,1) in K_9", 9, witness_double_star_odd_k(2, 1, 3).graph, lambda G, t: extract_double_star_m1(G, 2, trace=t)),
        ("S_3^1 in K_9", 9, witness_substar(3, 1, 3).graph, lambda G, t: extract_subdivided_star(G, 3, 1, trace=t)),
    ]
    summary = {}
    for name, order, W, fn in jobs:
        rnd = random.Random(args.seed)
        branches, failures = Counter(), 0
        t0 = time.perf_counter()
        for _ in range(args.trials):
            G = near_witness(W, rnd) if rnd.random() < args.near_fraction else random_coloring(order, 3, rnd)
            trace = ProofTrace()
            emb = fn(G, trace)
            failures += not validate_embedding(G, emb)
            branches[" > ".join(s for s, _ in trace.steps)] += 1
        dt = time.perf_counter() - t0
        summary[name] = {"trials": args.trials, "failures": failures, "seconds": round(dt, 2),
                         "branches": dict(branches.most_common())}
        print(f"{name}: {args.trials - failures}/{args.trials} valid in {dt:.2f}s")
        for path, count in branches.most_common():
            print(f"    {count:>6}  {path}")
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(summary, indent=1))


if __name__ == "__main__":
    main()
