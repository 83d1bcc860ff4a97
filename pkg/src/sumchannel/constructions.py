"""The four sum-channel code constructions.

* Construction 1 (l = 2, two deletions): both rows in shifted VT cosets and
  the sum matrix inside P+_2(n, k).
* Construction 2 (any l, two deletions): the vector of row signatures sigma
  lies in a coset of a two-erasure MDS code, plus the P+_l constraint.
* Construction 3 (l = 2, one edit): fixed row parities.
* Construction 4 (any l, one edit): row-parity vector in a Hamming coset.

Membership and decoding work at any n.  Codebook enumeration is exhaustive
and therefore size-capped.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .algebra import (
    ERASED,
    HammingParams,
    MDSCodeParams,
    SVTParams,
    hamming_coset,
    hamming_decode,
    hamming_syndrome,
    mds_erasure_decode,
    sigma,
    sigma_parts,
    svt_decode,
    svt_member,
    syndrome,
)
from .bits import BitWord, CodeMatrix, ReceivedMatrix, parity, runs, xor_rows
from .channel import dna_partitions, strand_from_partitions, sum_matrix
from .errors import AmbiguityError, DecodeFailure, InvalidArgument, ResourceLimitError
from .misalignment import in_P_plus, p_plus_mask

DEFAULT_ENUM_CAP_BITS = 24


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length() if n > 1 else 0


# -- parameters ------------------------------------------------------------

@dataclass(frozen=True)
class Construction1Params:
    n: int
    c1: int = 0
    b1: int = 0
    c2: int = 0
    b2: int = 0
    c: int = 3

    def __post_init__(self):
        if self.n < 2:
            raise InvalidArgument("n must be >= 2")
        for name in ("c1", "c2"):
            if not 0 <= getattr(self, name) < self.P:
                raise InvalidArgument(f"{name} must lie in [0, {self.P})")
        if self.b1 not in (0, 1) or self.b2 not in (0, 1):
            raise InvalidArgument("b1, b2 must be bits")
        if self.k >= self.n:
            raise InvalidArgument(f"k={self.k} must be < n={self.n}; lower c")

    @property
    def P(self) -> int:
        return ceil_log2(self.n) + self.c + 1

    @property
    def k(self) -> int:
        return self.P - 1

    @property
    def svt1(self) -> SVTParams:
        return SVTParams(self.n, self.P, self.c1, self.b1)

    @property
    def svt2(self) -> SVTParams:
        return SVTParams(self.n, self.P, self.c2, self.b2)

    def to_json(self) -> dict:
        return {"n": self.n, "c": self.c, "c1": self.c1, "b1": self.b1,
                "c2": self.c2, "b2": self.b2, "P": self.P, "k": self.k}


@dataclass(frozen=True)
class Construction2Params:
    ell: int
    n: int
    s0: int = 0
    s1: int = 0
    c: int = 3

    def __post_init__(self):
        if self.ell < 2:
            raise InvalidArgument("Construction 2 needs l >= 2")
        if self.k >= self.n:
            raise InvalidArgument(f"k={self.k} must be < n={self.n}; lower c")
        # validates the coset and l <= 2^m - 1
        MDSCodeParams(self.ell, self.h + 1, self.s0, self.s1)

    @property
    def P(self) -> int:
        return ceil_log2(self.n) + self.c + 1

    @property
    def k(self) -> int:
        return self.P - 1

    @property
    def h(self) -> int:
        return ceil_log2(self.P)

    @property
    def mds(self) -> MDSCodeParams:
        return MDSCodeParams(self.ell, self.h + 1, self.s0, self.s1)

    def svt_for(self, sig) -> SVTParams:
        syn, par = sigma_parts(sig, self.h)
        return SVTParams(self.n, self.P, syn, par, modulus=1 << self.h)

    def to_json(self) -> dict:
        return {"l": self.ell, "n": self.n, "c": self.c, "s0": self.s0, "s1": self.s1,
                "P": self.P, "k": self.k, "h": self.h}


@dataclass(frozen=True)
class Construction3Params:
    n: int
    b1: int = 0
    b2: int = 0

    def __post_init__(self):
        if self.n < 1 or self.b1 not in (0, 1) or self.b2 not in (0, 1):
            raise InvalidArgument("need n >= 1 and bit-valued b1, b2")

    def to_json(self) -> dict:
        return {"n": self.n, "b1": self.b1, "b2": self.b2}


@dataclass(frozen=True)
class Construction4Params:
    ell: int
    n: int
    syndrome: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgument("n must be >= 1")
        HammingParams(self.ell, self.syndrome)

    @property
    def ham(self) -> HammingParams:
        return HammingParams(self.ell, self.syndrome)

    def to_json(self) -> dict:
        return {"l": self.ell, "n": self.n, "syndrome": self.syndrome, "r": self.ham.r}


def _shape(X, ell: Optional[int], n: int) -> CodeMatrix:
    X = X if isinstance(X, CodeMatrix) else CodeMatrix(X)
    if (ell is not None and X.ell != ell) or X.n != n:
        raise InvalidArgument(f"expected a {ell}x{n} matrix, got {X.ell}x{X.n}")
    return X


# -- membership ------------------------------------------------------------

def c1_member(X, p: Construction1Params) -> bool:
    X = _shape(X, 2, p.n)
    return svt_member(X[0], p.svt1) and svt_member(X[1], p.svt2) and in_P_plus(X, p.k)


def sigma_vector(X, h: int) -> list:
    return [sigma(row, h) for row in X]


def c2_member(X, p: Construction2Params) -> bool:
    X = _shape(X, p.ell, p.n)
    return p.mds.contains(sigma_vector(X, p.h)) and in_P_plus(X, p.k)


def c3_member(X, p: Construction3Params) -> bool:
    X = _shape(X, 2, p.n)
    return parity(X[0]) == p.b1 and parity(X[1]) == p.b2


def c4_member(X, p: Construction4Params) -> bool:
    X = _shape(X, p.ell, p.n)
    return hamming_syndrome([parity(r) for r in X]) == p.syndrome


# -- decoding helpers ------------------------------------------------------

def _rows_of(Y, ell: int) -> list:
    Y = Y if isinstance(Y, ReceivedMatrix) else ReceivedMatrix(Y)
    if len(Y) != ell + 1:
        raise InvalidArgument(f"expected {ell + 1} received rows, got {len(Y)}")
    return [tuple(r) for r in Y]


def _odd_columns(rows: Sequence[tuple], n: int) -> list:
    return [j for j in range(1, n + 1) if sum(r[j - 1] for r in rows) & 1]


def _scan(rows: Sequence[tuple], short: Sequence[int], n: int) -> tuple:
    """Forward and backward column scans over a matrix with two short rows.

    Forward: column j reads every row at j.  Backward: short rows are read
    at j-1 and full rows at j.  Returns (j1, j2) with the clean-scan
    defaults j1 = n and j2 = 1.
    """
    j1 = n
    for j in range(1, n):
        if sum(r[j - 1] for r in rows) & 1:
            j1 = j
            break
    j2 = 1
    for j in range(n, 1, -1):
        s = sum(r[j - 2] if i in short else r[j - 1] for i, r in enumerate(rows))
        if s & 1:
            j2 = j
            break
    return j1, j2


def _insert(r: tuple, pos: int, v: int) -> tuple:
    return r[:pos - 1] + (v,) + r[pos - 1:]


def _decode_two_deletions(
    rows: list,
    n: int,
    P: int,
    svt_of: Callable[[int], Optional[SVTParams]],
    row_parity: Sequence[int],
    trace: dict,
) -> list:
    """Core of the two-deletion decoder; returns the full (l+1)-row sum matrix.

    ``svt_of(i)`` gives the SVT parameters of data row i (0-based) or None
    for the parity row; ``row_parity`` lists the expected parity of every
    row of the sum matrix.
    """
    lengths = [len(r) for r in rows]
    if any(L > n for L in lengths) or sum(n - L for L in lengths) > 2:
        raise DecodeFailure(f"row lengths {lengths} are outside the two-deletion model")
    short = [i for i, L in enumerate(lengths) if L < n]
    ell = len(rows) - 1
    trace.setdefault("j1", None)
    trace.setdefault("j2", None)
    if not short:
        trace.update(case="none", path="none")
        return rows
    if len(short) == 1:
        (i,) = short
        trace.update(case="one-row", path="xor")
        rows = list(rows)
        rows[i] = tuple(xor_rows([r for j, r in enumerate(rows) if j != i], n))
        return rows
    a, b = short
    j1, j2 = _scan(rows, short, n)
    trace.update(case="two-rows", j1=j1, j2=j2, rows=[a + 1, b + 1])
    lo, hi = min(j1, j2), max(j1, j2)
    if hi - lo < P:
        trace["path"] = "svt"
        target = a if a < ell else b  # at most one short row is the parity row
        fixed = svt_decode(rows[target], svt_of(target), (lo, hi))
        rows = list(rows)
        rows[target] = tuple(fixed)
        other = b if target == a else a
        rows[other] = tuple(xor_rows([r for j, r in enumerate(rows) if j != other], n))
        return rows
    trace["path"] = "unique-insertion"
    va = row_parity[a] ^ parity(rows[a])
    vb = row_parity[b] ^ parity(rows[b])
    found = set()
    for pa, pb in ((j1, j2), (j2, j1)):
        cand = list(rows)
        cand[a] = _insert(rows[a], pa, va)
        cand[b] = _insert(rows[b], pb, vb)
        if not _odd_columns(cand, n):
            found.add(tuple(cand))
    if not found:
        raise DecodeFailure(f"no insertion at columns {j1}, {j2} restores the column parities")
    if len(found) > 1:
        raise AmbiguityError(f"{len(found)} insertions at columns {j1}, {j2} are consistent")
    return list(found.pop())


def _finish(rows: list, ell: int, member: Callable, what: str) -> CodeMatrix:
    X = CodeMatrix(rows[:ell])
    if not member(X):
        raise DecodeFailure(f"reconstruction is not a {what} codeword")
    return X


# -- Construction 1 ----------------------------------------------------------

def c1_decode(Y, p: Construction1Params, trace: Optional[dict] = None) -> CodeMatrix:
    """Correct up to two deletions spread over the three rows.

    Pass a dict as ``trace`` to receive {case, j1, j2, path}.
    """
    trace = {} if trace is None else trace
    rows = _rows_of(Y, 2)
    svts = (p.svt1, p.svt2)
    rows = _decode_two_deletions(rows, p.n, p.P, lambda i: svts[i],
                                 (p.b1, p.b2, p.b1 ^ p.b2), trace)
    return _finish(rows, 2, lambda X: c1_member(X, p), "Construction 1")


def _syndrome_table(n: int, q: int) -> np.ndarray:
    v = np.arange(1 << n, dtype=np.int64)
    s = np.zeros_like(v)
    for j in range(1, n + 1):
        s += j * ((v >> (n - j)) & 1)
    return s % q


def _parity_table(n: int) -> np.ndarray:
    v = np.arange(1 << n, dtype=np.int64)
    par = np.zeros_like(v)
    for j in range(n):
        par ^= (v >> j) & 1
    return par


def _check_enum(bits: int, cap_bits: int, what: str):
    if bits > cap_bits:
        raise ResourceLimitError(what, 2**bits, 2**cap_bits)


def c1_coset_table(n: int, c: int = 3, cap_bits: int = DEFAULT_ENUM_CAP_BITS) -> tuple:
    """Sizes of every (c1, b1, c2, b2) coset inside P+_2(n, k).

    Returns (counts, constrained) where counts has shape (P, 2, P, 2).
    """
    _check_enum(2 * n, cap_bits, "Construction 1 coset search")
    proto = Construction1Params(n, c=c)
    P, k = proto.P, proto.k
    x1 = np.arange(1 << (2 * n), dtype=np.int64) >> n
    x2 = np.arange(1 << (2 * n), dtype=np.int64) & ((1 << n) - 1)
    ok = p_plus_mask([x1, x2], n, k)
    syn, par = _syndrome_table(n, P), _parity_table(n)
    key = ((syn[x1] * 2 + par[x1]) * P + syn[x2]) * 2 + par[x2]
    counts = np.bincount(key[ok], minlength=4 * P * P).reshape(P, 2, P, 2)
    return counts, int(ok.sum())


def c1_search_coset(n: int, c: int = 3, cap_bits: int = DEFAULT_ENUM_CAP_BITS) -> tuple:
    """Largest Construction-1 coset; ties go to the lexicographically least
    (c1, b1, c2, b2).  Returns (params, size)."""
    counts, _ = c1_coset_table(n, c, cap_bits)
    flat = int(np.argmax(counts.reshape(-1)))
    c1, b1, c2, b2 = (int(v) for v in np.unravel_index(flat, counts.shape))
    return Construction1Params(n, c1, b1, c2, b2, c=c), int(counts.reshape(-1)[flat])


def _matrices_from_mask(rows: Sequence[np.ndarray], mask: np.ndarray, n: int) -> list:
    picked = [r[mask] for r in rows]
    out = []
    for vals in zip(*(p.tolist() for p in picked)):
        out.append(tuple.__new__(CodeMatrix, (BitWord.from_int(v, n) for v in vals)))
    return out


def _all_rows(ell: int, n: int, cap_bits: int, what: str) -> list:
    _check_enum(ell * n, cap_bits, what)
    idx = np.arange(1 << (ell * n), dtype=np.int64)
    mask = (1 << n) - 1
    return [(idx >> (n * (ell - 1 - r))) & mask for r in range(ell)]


def c1_codebook(p: Construction1Params, cap_bits: int = DEFAULT_ENUM_CAP_BITS) -> list:
    """All codewords in lexicographic order."""
    n = p.n
    x1, x2 = _all_rows(2, n, cap_bits, "Construction 1 codebook")
    syn, par = _syndrome_table(n, p.P), _parity_table(n)
    mask = ((syn[x1] == p.c1) & (par[x1] == p.b1) & (syn[x2] == p.c2) & (par[x2] == p.b2))
    sel = np.flatnonzero(mask)
    keep = p_plus_mask([x1[sel], x2[sel]], n, p.k)
    full = np.zeros_like(mask)
    full[sel[keep]] = True
    return _matrices_from_mask([x1, x2], full, n)


# -- Construction 2 ----------------------------------------------------------

def c2_decode(Y, p: Construction2Params, trace: Optional[dict] = None) -> CodeMatrix:
    trace = {} if trace is None else trace
    rows = _rows_of(Y, p.ell)
    n, ell = p.n, p.ell
    short = [i for i, r in enumerate(rows) if len(r) < n]
    if len(short) > 2:
        raise InvalidArgument(f"{len(short)} short rows; at most 2 are correctable")
    sigmas = [sigma(rows[i], p.h) if len(rows[i]) == n else ERASED for i in range(ell)]
    if len(short) == 2:
        # the parity row only takes part through the column scans
        sigmas = mds_erasure_decode(sigmas, p.mds)
        trace["mds_erasures"] = [i + 1 for i in short if i < ell]
    row_parity = [sigma_parts(s, p.h)[1] if s is not ERASED else 0 for s in sigmas]
    row_parity.append(sum(row_parity) & 1)
    rows = _decode_two_deletions(rows, n, p.P, lambda i: p.svt_for(sigmas[i]), row_parity, trace)
    return _finish(rows, ell, lambda X: c2_member(X, p), "Construction 2")


def _words_by_sigma(n: int, h: int) -> dict:
    syn, par = _syndrome_table(n, 1 << h), _parity_table(n)
    key = (par << h) | syn
    order = np.argsort(key, kind="stable")
    out: dict = {}
    for v in order.tolist():
        out.setdefault(int(key[v]), []).append(v)
    return out


def c2_sample_codewords(p: Construction2Params, count: int, seed: int = 0,
                        max_tries: int = 10**6) -> list:
    """Distinct random codewords, sorted.

    Rows 1..l-2 are drawn uniformly; the last two sigma values then follow
    from the MDS coset (a two-erasure decode), and the last two rows are drawn
    among words with those signatures.  Draws failing P+ are rejected.
    """
    if p.n > 22:
        raise ResourceLimitError("sigma tables", 2**p.n, 2**22)
    rng = random.Random(seed)
    table = _words_by_sigma(p.n, p.h)
    out = set()
    for _ in range(max_tries):
        if len(out) >= count:
            break
        head = [rng.randrange(1 << p.n) for _ in range(p.ell - 2)]
        sig = [sigma(BitWord.from_int(v, p.n), p.h) for v in head] + [ERASED, ERASED]
        sig = mds_erasure_decode(sig, p.mds)
        tail = [rng.choice(table[s.value]) for s in sig[-2:]]
        X = CodeMatrix([BitWord.from_int(v, p.n) for v in head + tail])
        if in_P_plus(X, p.k):
            out.add(X)
    if len(out) < count:
        raise ResourceLimitError("codeword sampling", count, len(out))
    return sorted(out)


def c2_codebook(p: Construction2Params, cap_bits: int = 20) -> list:
    rows = _all_rows(p.ell, p.n, cap_bits, "Construction 2 codebook")
    h = p.h
    syn, par = _syndrome_table(p.n, 1 << h), _parity_table(p.n)
    gf = p.mds.field
    mul = np.array([[gf.mul(a, b) for b in range(gf.size)] for a in range(gf.size)], dtype=np.int64)
    c0 = np.zeros_like(rows[0])
    c1 = np.zeros_like(rows[0])
    for i, alpha in enumerate(p.mds.alphas):
        s = (par[rows[i]] << h) | syn[rows[i]]
        c0 ^= s
        c1 ^= mul[alpha.value][s]
    mask = (c0 == p.s0) & (c1 == p.s1)
    sel = np.flatnonzero(mask)
    keep = p_plus_mask([r[sel] for r in rows], p.n, p.k)
    full = np.zeros_like(mask)
    full[sel[keep]] = True
    return _matrices_from_mask(rows, full, p.n)


# -- Constructions 3 and 4 -------------------------------------------------

def _single_indel(rows: list, n: int, ell: int, trace: dict) -> list:
    """Rebuild the one row whose length is off by one from the others."""
    (i,) = [j for j, r in enumerate(rows) if len(r) != n]
    trace.update(case="indel", row=i + 1, path="xor")
    rebuilt = tuple(xor_rows([r for j, r in enumerate(rows) if j != i], n))
    got = rows[i]
    if len(got) == n - 1:
        ok = any(rebuilt[:q] + rebuilt[q + 1:] == got for q in range(n))
    else:
        ok = any(got[:q] + got[q + 1:] == rebuilt for q in range(n + 1))
    if not ok:
        raise DecodeFailure(f"row {i + 1} is not one indel away from its parity reconstruction")
    rows = list(rows)
    rows[i] = rebuilt
    return rows


def _single_edit(rows: list, n: int, ell: int, locate_row: Callable, trace: dict) -> list:
    lengths = [len(r) for r in rows]
    off = [i for i, L in enumerate(lengths) if L != n]
    if len(off) > 1 or any(abs(L - n) > 1 for L in lengths):
        raise DecodeFailure(f"row lengths {lengths} are outside the single-edit model")
    if off:
        return _single_indel(rows, n, ell, trace)
    odd = _odd_columns(rows, n)
    trace["j"] = odd[0] if len(odd) == 1 else None
    if not odd:
        trace.update(case="none", path="none")
        return rows
    if len(odd) > 1:
        raise DecodeFailure(f"{len(odd)} odd-parity columns; a single substitution flips one")
    j = odd[0]
    i = locate_row(rows)
    trace.update(case="substitution", row=i + 1, path="parity")
    rows = list(rows)
    if i < ell:
        r = rows[i]
        rows[i] = r[:j - 1] + (1 - r[j - 1],) + r[j:]
    return rows


def c3_decode(Y, p: Construction3Params, trace: Optional[dict] = None) -> CodeMatrix:
    trace = {} if trace is None else trace
    rows = _rows_of(Y, 2)
    expected = (p.b1, p.b2, p.b1 ^ p.b2)

    def locate(rows):
        bad = [i for i in range(3) if parity(rows[i]) != expected[i]]
        if len(bad) != 1:
            raise DecodeFailure(f"rows {[i + 1 for i in bad]} violate their parities")
        return bad[0]

    rows = _single_edit(rows, p.n, 2, locate, trace)
    return _finish(rows, 2, lambda X: c3_member(X, p), "Construction 3")


def c4_decode(Y, p: Construction4Params, trace: Optional[dict] = None) -> CodeMatrix:
    trace = {} if trace is None else trace
    ell = p.ell
    rows = _rows_of(Y, ell)

    def locate(rows):
        _, flipped = hamming_decode([parity(r) for r in rows[:ell]], p.ham)
        return ell if flipped is None else flipped - 1

    rows = _single_edit(rows, p.n, ell, locate, trace)
    return _finish(rows, ell, lambda X: c4_member(X, p), "Construction 4")


def c3_codebook(p: Construction3Params, cap_bits: int = DEFAULT_ENUM_CAP_BITS) -> list:
    x1, x2 = _all_rows(2, p.n, cap_bits, "Construction 3 codebook")
    par = _parity_table(p.n)
    return _matrices_from_mask([x1, x2], (par[x1] == p.b1) & (par[x2] == p.b2), p.n)


def c3_size(p: Construction3Params, cap_bits: int = DEFAULT_ENUM_CAP_BITS) -> int:
    """Codebook size by exhaustive enumeration of all 2 x n matrices."""
    x1, x2 = _all_rows(2, p.n, cap_bits, "Construction 3 size")
    par = _parity_table(p.n)
    return int(((par[x1] == p.b1) & (par[x2] == p.b2)).sum())


def c4_size_enumerated(p: Construction4Params, cap_bits: int = DEFAULT_ENUM_CAP_BITS,
                       method: str = "auto") -> int:
    """Count matrices whose row parities have the target Hamming syndrome.

    ``method="full"`` filters every l x n matrix.  ``method="rows"`` counts
    the same set exactly by XOR-convolving, row by row, the histogram of
    syndrome contributions over all 2^n words, so it also reaches sizes
    past the enumeration cap.  ``"auto"`` picks full when it fits.
    """
    if method == "auto":
        method = "full" if p.ell * p.n <= cap_bits else "rows"
    if method == "rows":
        par = _parity_table(p.n)
        odd = int(par.sum())
        size = 1 << p.ham.r
        counts = [1] + [0] * (size - 1)
        for i in range(1, p.ell + 1):
            nxt = [0] * size
            for s, c in enumerate(counts):
                if c:
                    nxt[s] += c * (2**p.n - odd)
                    nxt[s ^ i] += c * odd
            counts = nxt
        return counts[p.syndrome]
    if method != "full":
        raise InvalidArgument(f"unknown method {method!r}")
    rows = _all_rows(p.ell, p.n, cap_bits, "Construction 4 size")
    par = _parity_table(p.n)
    syn = np.zeros_like(rows[0])
    for i, r in enumerate(rows, start=1):
        syn ^= par[r] * i
    return int((syn == p.syndrome).sum())


def c4_size(p: Construction4Params) -> int:
    """Exact size: rows are independent given their parities, so the size is
    |Hamming coset| * 2^(l(n-1)).  The coset itself is enumerated."""
    return len(hamming_coset(p.ham)) * 2 ** (p.ell * (p.n - 1))


def c4_codebook(p: Construction4Params, cap_bits: int = 20) -> list:
    rows = _all_rows(p.ell, p.n, cap_bits, "Construction 4 codebook")
    par = _parity_table(p.n)
    syn = np.zeros_like(rows[0])
    for i, r in enumerate(rows, start=1):
        syn ^= par[r] * i
    return _matrices_from_mask(rows, syn == p.syndrome, p.n)


# -- index encoding ----------------------------------------------------------

def encode_index(info: int, codebook: Sequence[CodeMatrix]) -> CodeMatrix:
    if not 0 <= info < len(codebook):
        raise InvalidArgument(f"index {info} out of range for a codebook of size {len(codebook)}")
    return codebook[info]


def decode_index(X, codebook: Sequence[CodeMatrix]) -> int:
    import bisect

    X = CodeMatrix(X)
    i = bisect.bisect_left(codebook, X)
    if i == len(codebook) or codebook[i] != X:
        raise InvalidArgument("matrix is not in the codebook")
    return i


# -- run-level error patterns --------------------------------------------------

def run_starts(w: Sequence[int]) -> list:
    return [r.start for r in runs(w)] if len(w) else []


def distinct_row_deletion_patterns(X) -> Iterable[tuple]:
    """Every pair of single deletions in two different rows of X+, one
    representative per pair of runs.  Yields ((row_a, pos_a, row_b, pos_b), Y)."""
    rows = [tuple(r) for r in sum_matrix(X).rows]
    starts = [run_starts(r) for r in rows]
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            for pa in starts[a]:
                ya = rows[a][:pa - 1] + rows[a][pa:]
                for pb in starts[b]:
                    out = list(rows)
                    out[a] = ya
                    out[b] = rows[b][:pb - 1] + rows[b][pb:]
                    yield (a + 1, pa, b + 1, pb), tuple.__new__(
                        ReceivedMatrix, (BitWord._raw(r) for r in out))


def single_substitution_patterns(X) -> Iterable[tuple]:
    rows = [tuple(r) for r in sum_matrix(X).rows]
    for i, r in enumerate(rows):
        for j in range(1, len(r) + 1):
            out = list(rows)
            out[i] = r[:j - 1] + (1 - r[j - 1],) + r[j:]
            yield (i + 1, j), tuple.__new__(ReceivedMatrix, (BitWord._raw(x) for x in out))


# -- DNA demo ------------------------------------------------------------------

def dna_protect(strand: str) -> str:
    """Append one base so both partition reads have even parity.

    The protected strand's first two reads form a C_{0,0}(n+1) codeword.
    """
    w1, w2, _ = dna_partitions(strand)
    return strand.upper() + strand_from_partitions([parity(w1)], [parity(w2)])


def dna_recover(reads: Sequence[Sequence[int]], trace: Optional[dict] = None) -> str:
    """Correct one edit in the three reads of a protected strand and strip
    the check base."""
    if len(reads) != 3:
        raise InvalidArgument("expected three partition reads")
    n = sorted(len(r) for r in reads)[1]  # a single edit changes at most one length
    X = c3_decode(ReceivedMatrix(reads), Construction3Params(n, 0, 0), trace)
    return strand_from_partitions(X[0], X[1])[:-1]
