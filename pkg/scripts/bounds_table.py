"""Print the size tables for both regimes.

Two deletions: cover size per divisor k next to the best Construction 1
coset and the redundancy each implies.  Single edits: sphere-packing bound
against Construction 4.

    python scripts/bounds_table.py --twodel 4 6 8 10 --edit-l 3 7
"""

import argparse
import math

from sumchannel.bounds import edit_bound_table, twodel_cover_table, upper_bound_A_2del
from sumchannel.constructions import c1_search_coset


def redundancy(bits, size):
    return bits - math.log2(size)


def twodel(ns, c):
    print(f"{'n':>3} {'k':>3} {'cover':>12} {'built':>8} {'4k form':>10}")
    for row in twodel_cover_table(ns):
        built = row.get("constructed", "-")
        print(f"{row['n']:>3} {row['k']:>3} {row['value']:>12} {built!s:>8} "
              f"{float(row['closed_form_4k']):>10.0f}")
    print()
    print(f"{'n':>3} {'A upper':>12} {'best k':>6} {'C1 size':>8} {'r(C1)':>7} {'r lower':>8}")
    for n in ns:
        rep = upper_bound_A_2del(n)
        try:
            _, size = c1_search_coset(n, c)
            c1 = f"{size:>8} {redundancy(2 * n, size):>7.2f}"
        except Exception as exc:  # too small for this slack, or too large to enumerate
            c1 = f"{'-':>8} {'-':>7}  ({type(exc).__name__})"
        print(f"{n:>3} {rep.value:>12} {rep.extras['k']:>6} {c1} "
              f"{redundancy(2 * n, rep.value):>8.2f}")


def edit(ells, ns):
    print(f"{'l':>3} {'n':>3} {'sphere packing':>15} {'C4':>12} {'ratio':>6}")
    for ell in ells:
        for row in edit_bound_table(ell, ns):
            ratio = row["construction4"] / row["sphere_packing"]
            print(f"{ell:>3} {row['n']:>3} {row['sphere_packing']:>15} "
                  f"{row['construction4']:>12} {ratio:>6.3f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--twodel", type=int, nargs="*", default=[4, 6, 8, 10])
    ap.add_argument("--c", type=int, default=1, help="slack c in k = ceil(log2 n) + c")
    ap.add_argument("--edit-l", type=int, nargs="*", default=[2, 3, 4, 7])
    ap.add_argument("--edit-n", type=int, nargs="*", default=[2, 4, 8])
    args = ap.parse_args()
    if args.twodel:
        twodel(args.twodel, args.c)
        print()
    if args.edit_l:
        edit(args.edit_l, args.edit_n)


if __name__ == "__main__":
    main()
