"""Exact sizes of L(n,k) and P+_2(n,k) against their counting lower bounds.

The P+ bound multiplies pairwise estimates as if the row pairs were
independent; this lists every (n, k) with a positive bound so a violation
would show up in the last column.
"""

import argparse

from sumchannel.misalignment import count_L, count_P_plus, lower_bound_L, lower_bound_P_plus


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n-L", type=int, default=10)
    ap.add_argument("--max-n-P", type=int, default=8)
    args = ap.parse_args()
    print(f"{'set':>4} {'n':>3} {'k':>3} {'count':>10} {'bound':>12} {'count/bound':>12} holds")
    for name, top, count, bound in (
            ("L", args.max_n_L, count_L, lower_bound_L),
            ("P+", args.max_n_P, lambda n, k: count_P_plus(2, n, k),
             lambda n, k: lower_bound_P_plus(2, n, k))):
        for n in range(2, top + 1):
            for k in range(1, n):
                lb = bound(n, k)
                if lb <= 0:
                    continue
                c = count(n, k)
                print(f"{name:>4} {n:>3} {k:>3} {c:>10} {float(lb):>12.1f} "
                      f"{c / float(lb):>12.4f} {'yes' if c >= lb else 'NO'}")


if __name__ == "__main__":
    main()
