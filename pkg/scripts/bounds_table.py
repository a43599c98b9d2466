"""Print bounds tables for double stars and subdivided stars with k colors, with provenance."""

import argparse

from starramsey.bounds import bounds_double_star, bounds_p4, bounds_substar


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-k", type=int, nargs="+", default=[2, 3, 4, 5])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--provenance", action="store_true")
    args = ap.parse_args()

    print("P4:", ", ".join(f"k={k}: {bounds_p4(k).summary().split(': ')[1]}" for k in range(2, 13)))
    for label, fn, n_min in (("S(n,m)", bounds_double_star, 1), ("S_n^m", bounds_substar, 2)):
        for k in args.k:
            print(f"\n{label}, k = {k}")
            for n in range(n_min, args.max_n + 1):
                cells = []
                for m in range(1, n + 1):
                    rep = fn(n, m, k)
                    cells.append(f"m={m}: {rep.summary().split(': ')[1]}")
                    if args.provenance:
                        cells[-1] += f" [{'; '.join(rep.lower_provenance)}]"
                print(f"  n={n}: " + " | ".join(cells))


if __name__ == "__main__":
    main()
