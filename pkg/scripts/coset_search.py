"""Sizes of all Construction 1 cosets, the best one, and how much of the
constrained set it keeps (pigeonhole promises at least 1/(4P^2))."""

import argparse
import json

import numpy as np

from sumchannel.constructions import Construction1Params, c1_coset_table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="*", default=[7, 8, 9, 10])
    ap.add_argument("--c", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = []
    for n in args.n:
        counts, total = c1_coset_table(n, args.c)
        P = Construction1Params(n, c=args.c).P
        best = tuple(int(v) for v in np.unravel_index(int(np.argmax(counts)), counts.shape))
        nonzero = counts[counts > 0]
        rows.append({"n": n, "P": P, "constrained": total, "best": best,
                     "best_size": int(counts.max()), "min_size": int(nonzero.min()),
                     "pigeonhole": total / (4 * P * P)})
    if args.json:
        print(json.dumps(rows, indent=1))
        return
    print(f"{'n':>3} {'P':>3} {'|P+|':>8} {'best coset':>14} {'size':>6} {'min':>6} {'|P+|/4P^2':>10}")
    for r in rows:
        print(f"{r['n']:>3} {r['P']:>3} {r['constrained']:>8} {str(r['best']):>14} "
              f"{r['best_size']:>6} {r['min_size']:>6} {r['pigeonhole']:>10.1f}")


if __name__ == "__main__":
    main()
