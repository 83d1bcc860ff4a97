"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
finish; they are also repeated in the terminal summary.
"""

import itertools
from collections import Counter

import pytest

from acceptance_log import criterion
from sumchannel.algebra import SVTParams, svt_decode, syndrome
from sumchannel.bits import BitWord, CodeMatrix, ReceivedMatrix, derivative
from sumchannel.bounds import (
    build_clique_cover_2del,
    build_clique_cover_edit,
    clique_cover_size_formula,
    exact_max_code,
    sphere_packing_edit_bound,
    verify_clique_cover,
)
from sumchannel.channel import dna_partitions, error_ball, is_correcting_code, sum_matrix
from sumchannel.constructions import (
    Construction2Params,
    Construction3Params,
    Construction4Params,
    c1_codebook,
    c1_decode,
    c1_search_coset,
    c2_decode,
    c2_member,
    c2_sample_codewords,
    c3_size,
    c4_size_enumerated,
    distinct_row_deletion_patterns,
    dna_protect,
    dna_recover,
)
from sumchannel.errors import SumChannelError
from sumchannel.misalignment import (
    count_L,
    count_P_plus,
    in_L,
    l_violation,
    lower_bound_L,
    lower_bound_P_plus,
    shift_ambiguous,
)


def all_matrices(ell, n):
    words = [BitWord(p) for p in itertools.product((0, 1), repeat=n)]
    return [CodeMatrix(rows) for rows in itertools.product(words, repeat=ell)]


def round_trip(book, decode, p, member=None):
    patterns = failures = 0
    paths = Counter()
    for X in book:
        for _, Y in distinct_row_deletion_patterns(X):
            patterns += 1
            trace = {}
            try:
                Z = decode(Y, p, trace)
            except SumChannelError:
                failures += 1
                continue
            paths[trace.get("path")] += 1
            if Z != X or (member is not None and not member(Z, p)):
                failures += 1
    return patterns, failures, paths


@pytest.fixture(scope="module")
def c1_books():
    books = {8: c1_search_coset(8, 3)}
    # n = 10 fits in the time budget on one core
    books[10] = c1_search_coset(10, 3)
    return {n: (p, c1_codebook(p)) for n, (p, _) in books.items()}


def test_criterion_01_construction3_size():
    with criterion(1, "Construction 3 size 2^(2n-2), n=3..10", 10) as box:
        for n in range(3, 11):
            for b1, b2 in itertools.product((0, 1), repeat=2):
                assert c3_size(Construction3Params(n, b1, b2)) == 2 ** (2 * n - 2), (n, b1, b2)
        box["detail"] = "32 parameter sets"


def test_criterion_02_edit_optimality():
    with criterion(2, "A(2,n;1)_SID = 2^(2n-2) for n=2,3", 60) as box:
        got = {n: exact_max_code(2, n, 1, "SID")[0] for n in (2, 3)}
        assert got == {2: 4, 3: 16}
        box["detail"] = f"A={got}"


def test_criterion_03_sphere_counts():
    with criterion(3, "substitution ball (l+1)n; output space n*2^(ln)", 60) as box:
        checked = 0
        for ell in (1, 2, 3):
            for n in (1, 2, 3, 4):
                for X in all_matrices(ell, n):
                    center = ReceivedMatrix(sum_matrix(X).rows)
                    ball = set(error_ball(X, 1, "S")) - {center}
                    assert len(ball) == (ell + 1) * n, (X, len(ball))
                    checked += 1
        for n in (1, 2, 3):
            outs = set()
            for X in all_matrices(2, n):
                outs |= set(error_ball(X, 1, "S")) - {ReceivedMatrix(sum_matrix(X).rows)}
            assert len(outs) == n * 2 ** (2 * n)
        box["detail"] = f"{checked} matrices"


def test_criterion_04_sphere_packing():
    with criterion(4, "Construction 4 size vs sphere packing", 30) as box:
        for ell in (3, 4, 5, 7):
            for n in (1, 2, 3, 4):
                size = c4_size_enumerated(Construction4Params(ell, n))
                r = ell.bit_length()  # ceil(log2(l+1))
                assert size == 2 ** (n * ell - r)
                bound = sphere_packing_edit_bound(ell, n)
                assert size <= bound
                if ell in (3, 7):
                    assert size == bound
        box["detail"] = "l in {3,4,5,7}, n <= 4; equality at l in {3,7}; l*n > 24 counted row by row"


def test_criterion_05_construction1_deletions(c1_books):
    with criterion(5, "Construction 1, two deletions, n=8 and n=10", 600) as box:
        parts = []
        for n, (p, book) in c1_books.items():
            assert is_correcting_code(book, 2, "D").ok
            patterns, failures, paths = round_trip(book, c1_decode, p)
            assert failures == 0
            parts.append(f"n={n}: |C|={len(book)}, {patterns} patterns, 0 failures")
        box["detail"] = "; ".join(parts)


def test_criterion_06_insertion_duality(c1_books):
    with criterion(6, "Construction 1 codebooks under two insertions", 600) as box:
        for n, (p, book) in c1_books.items():
            assert is_correcting_code(book, 2, "I").ok
        box["detail"] = f"n in {sorted(c1_books)}"


def test_criterion_07_construction2():
    with criterion(7, "Construction 2, l=3 n=8, 200 sampled codewords", 600) as box:
        p = Construction2Params(3, 8)
        book = c2_sample_codewords(p, 200, seed=2024)
        assert len(book) == 200 and all(c2_member(X, p) for X in book)
        patterns, failures, paths = round_trip(book, c2_decode, p, member=c2_member)
        assert failures == 0
        box["detail"] = f"{patterns} patterns, 0 failures, paths {dict(paths)}"


def svt_sweep(n):
    """Every word, every deletion (one per run), every window of length <= P
    covering a deletion position that yields the same received word."""
    calls = failures = 0
    for P in range(1, n + 1):
        mod = max(P, 2)
        params = {(c, b): SVTParams(n, P, c, b) for c in range(mod) for b in (0, 1)}
        for x in itertools.product((0, 1), repeat=n):
            p = params[(syndrome(x, mod), sum(x) & 1)]
            a = 1
            while a <= n:
                b = a
                while b < n and x[b] == x[a - 1]:
                    b += 1
                y = x[:a - 1] + x[a:]
                for lo in range(1, b + 1):
                    for hi in range(max(lo, a), min(n, lo + P - 1) + 1):
                        calls += 1
                        try:
                            if tuple(svt_decode(y, p, (lo, hi))) != x:
                                failures += 1
                        except SumChannelError:
                            failures += 1
                a = b + 1
    return calls, failures


def test_criterion_08_svt_oracle():
    with criterion(8, "SVT decoding, n <= 12, every window <= P", 300) as box:
        total = 0
        for n in range(1, 13):
            calls, failures = svt_sweep(n)
            assert failures == 0, (n, failures)
            total += calls
        box["detail"] = f"{total} decodes, modulus max(P,2)"


def test_criterion_09_misalignment():
    with criterion(9, "misalignment examples; shift ambiguity forces equal derivatives", 60) as box:
        a, b = BitWord("1110110"), BitWord("1010010")
        assert in_L(a, b, 5) and not in_L(a, b, 4)
        i, delta = l_violation(a, b, 4)
        assert (i, delta) == (3, -1)
        assert derivative(a)[2:6] == derivative(b)[1:5] == BitWord("1101")
        hits = 0
        # a one-bit window has no derivative, so lengths start at 2
        for k in range(2, 9):
            words = [BitWord(w) for w in itertools.product((0, 1), repeat=k)]
            for w1 in words:
                for w2 in words:
                    for v1, v2 in itertools.product((0, 1), repeat=2):
                        if shift_ambiguous(w1, w2, v1, v2):
                            hits += 1
                            assert derivative(w1) == derivative(w2)
        box["detail"] = f"{hits} ambiguous tuples, all with equal derivatives"


def test_criterion_10_counting_bounds():
    with criterion(10, "exact counts dominate the counting lower bounds", 300) as box:
        checked = []
        for n in range(2, 11):
            for k in range(1, n):
                lb = lower_bound_L(n, k)
                if lb > 0:
                    checked.append(("L", n, k))
                    assert count_L(n, k) >= lb, (n, k)
        violations = []
        for n in range(2, 9):
            for k in range(1, n):
                lb = lower_bound_P_plus(2, n, k)
                if lb > 0:
                    checked.append(("P+", n, k))
                    if count_P_plus(2, n, k) < lb:
                        violations.append((n, k))
        assert not violations, f"P+ bound violated at {violations}"
        box["detail"] = f"{len(checked)} (set,n,k) cases, no violations"


def test_criterion_11_clique_covers():
    with criterion(11, "clique covers: coverage, cliques, exact size", 600) as box:
        sizes = {}
        for n, k in [(4, 2), (6, 2), (6, 3), (8, 4)]:
            cover = build_clique_cover_2del(n, k)
            check = verify_clique_cover(cover, check_cliques=n <= 6)
            assert check.ok, (n, k, check)
            assert len(cover) == clique_cover_size_formula(n, k)
            sizes[(n, k)] = len(cover)
        for n in range(1, 7):
            cover = build_clique_cover_edit(n)
            assert len(cover) == 2 ** (2 * n - 2) and verify_clique_cover(cover).ok
        box["detail"] = f"sizes {sizes}"


def test_criterion_12_dna():
    with criterion(12, "DNA partitions and single-substitution recovery", 10) as box:
        w1, w2, w3 = dna_partitions("AGGTC")
        assert (str(w1), str(w2), str(w3)) == ("01110", "00011", "01101")
        assert w1 + w2 == w3
        recovered = 0
        for strand in ("AGGTC", "ACGTACGTTGCA", "TTTT", "A"):
            reads = list(dna_partitions(dna_protect(strand)))
            assert dna_recover(reads) == strand
            for r, w in enumerate(reads):
                for j in range(len(w)):
                    bad = list(reads)
                    bad[r] = BitWord._raw(w[:j] + (1 - w[j],) + w[j + 1:])
                    assert dna_recover(bad) == strand
                    recovered += 1
        box["detail"] = f"{recovered} corrupted reads recovered"
