"""Exhaustive round trips through every decoder, with decoder-path counts.

Construction 1 and 2 see every pair of deletions in two distinct rows
(one per run pair); 3 and 4 see every single substitution, deletion and
insertion.
"""

import argparse
import itertools
import random
import time
from collections import Counter

from sumchannel.channel import error_ball
from sumchannel.constructions import (
    Construction2Params,
    Construction3Params,
    Construction4Params,
    c1_codebook,
    c1_decode,
    c1_search_coset,
    c2_decode,
    c2_sample_codewords,
    c3_codebook,
    c3_decode,
    c4_codebook,
    c4_decode,
    distinct_row_deletion_patterns,
)
from sumchannel.errors import SumChannelError


def run(name, book, patterns, decode, p):
    t0 = time.perf_counter()
    paths, fails, total = Counter(), 0, 0
    for X in book:
        for Y in patterns(X):
            total += 1
            trace = {}
            try:
                ok = decode(Y, p, trace) == X
            except SumChannelError:
                ok = False
            fails += not ok
            paths[trace.get("path", "?")] += 1
    print(f"{name:<28} |C|={len(book):<6} patterns={total:<8} failures={fails:<4} "
          f"{time.perf_counter() - t0:6.1f}s  {dict(paths)}")
    return fails


def deletions(X):
    return (Y for _, Y in distinct_row_deletion_patterns(X))


def edits(X):
    return error_ball(X, 1, "SID")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n1", type=int, nargs="*", default=[7, 8])
    ap.add_argument("--c", type=int, default=3)
    ap.add_argument("--l2", type=int, default=3)
    ap.add_argument("--n2", type=int, default=8)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    fails = 0
    for n in args.n1:
        p, _ = c1_search_coset(n, args.c)
        fails += run(f"c1 n={n} coset={p.c1},{p.b1},{p.c2},{p.b2}", c1_codebook(p),
                     deletions, c1_decode, p)
    p2 = Construction2Params(args.l2, args.n2, c=args.c)
    book = c2_sample_codewords(p2, args.samples, seed=args.seed)
    fails += run(f"c2 l={args.l2} n={args.n2}", book, deletions, c2_decode, p2)
    for n, (b1, b2) in itertools.product((4, 5), [(0, 0), (1, 0)]):
        p3 = Construction3Params(n, b1, b2)
        fails += run(f"c3 n={n} b=({b1},{b2})", c3_codebook(p3), edits, c3_decode, p3)
    p4 = Construction4Params(3, 3)
    book = random.Random(args.seed).sample(c4_codebook(p4), 64)
    fails += run("c4 l=3 n=3 (64 sampled)", book, edits, c4_decode, p4)
    raise SystemExit(1 if fails else 0)


if __name__ == "__main__":
    main()
