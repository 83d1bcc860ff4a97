"""Misalignment constraints L(n, k) and P+_l(n, k).

A pair (a, b) is in L(n, k) when no length-k window of the derivative of a
equals the window of the derivative of b at the same start or one position
to either side.  Shifted windows that leave [1, n-1] are skipped.

Two code paths exist: readable tuple-based predicates, and numpy versions
over integer-encoded words (position 1 is the most significant bit) used by
the exhaustive counters.  Tests check them against each other.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Optional, Sequence

import numpy as np

from .bits import BitWord, derivative
from .channel import sum_matrix
from .errors import InvalidArgument, ResourceLimitError

DEFAULT_COUNT_CAP_N = 11


def _check(a, b, k):
    if len(a) != len(b):
        raise InvalidArgument(f"length mismatch: {len(a)} vs {len(b)}")
    n = len(a)
    if not 1 <= k < n:
        raise InvalidArgument(f"need 1 <= k < n, got k={k}, n={n}")
    return n


def l_violation(a: Sequence[int], b: Sequence[int], k: int) -> Optional[tuple]:
    """First (i, delta) with equal derivative windows, or None if (a, b) is in L."""
    n = _check(a, b, k)
    da, db = derivative(a), derivative(b)
    for i in range(1, n - k + 1):
        wa = da[i - 1:i - 1 + k]
        for delta in (-1, 0, 1):
            j = i + delta
            if j < 1 or j + k - 1 > n - 1:
                continue
            if wa == db[j - 1:j - 1 + k]:
                return i, delta
    return None


def in_L(a: Sequence[int], b: Sequence[int], k: int) -> bool:
    return l_violation(a, b, k) is None


def in_P_plus(X, k: int) -> bool:
    rows = sum_matrix(X).rows
    return all(in_L(rows[i], rows[j], k)
               for i in range(len(rows)) for j in range(i + 1, len(rows)))


def shift_ambiguous(w1: Sequence[int], w2: Sequence[int], v1: int, v2: int) -> bool:
    """Whether (v1 w1) + (w2 v2) == (w1 v1) + (v2 w2)."""
    if len(w1) != len(w2):
        raise InvalidArgument("windows must have equal length")
    w1, w2 = tuple(w1), tuple(w2)
    left = BitWord._raw((v1,) + w1) + BitWord._raw(w2 + (v2,))
    right = BitWord._raw(w1 + (v1,)) + BitWord._raw((v2,) + w2)
    return left == right


def lower_bound_L(n: int, k: int) -> Fraction:
    return Fraction(4**n) * (1 - Fraction(3 * (n - k), 2**k))


def lower_bound_P_plus(ell: int, n: int, k: int) -> Fraction:
    return Fraction(2**(n * ell)) * (1 - Fraction(3 * (n - k), 2**k)) ** comb(ell + 1, 2)


def simplified_bound_P_plus(ell: int, n: int, c: int) -> Fraction:
    """Value of the P+ bound at k = ceil(log2 n) + c in its simplified form."""
    return Fraction(2**(n * ell)) * (1 - Fraction(3, 2**c)) ** (ell * ell)


# -- vectorized paths ------------------------------------------------------

def derivative_ints(words: np.ndarray, n: int) -> np.ndarray:
    """Derivatives of n-bit integer words as (n-1)-bit integers."""
    words = np.asarray(words, dtype=np.int64)
    return (words ^ (words >> 1)) & ((1 << (n - 1)) - 1)


def _window(d: np.ndarray, n: int, i: int, k: int) -> np.ndarray:
    # window [i, i+k-1] of an (n-1)-bit derivative; position 1 is the top bit
    return (d >> (n - i - k)) & ((1 << k) - 1)


def in_L_ints(da: np.ndarray, db: np.ndarray, n: int, k: int) -> np.ndarray:
    """Vectorized L(n, k) membership on derivative integers (broadcasting)."""
    if not 1 <= k < n:
        raise InvalidArgument(f"need 1 <= k < n, got k={k}, n={n}")
    ok = np.ones(np.broadcast(da, db).shape, dtype=bool)
    last = n - k
    for i in range(1, last + 1):
        wa = _window(da, n, i, k)
        for j in (i - 1, i, i + 1):
            if 1 <= j <= last:
                ok &= wa != _window(db, n, j, k)
    return ok


def count_L(n: int, k: int, cap_n: int = DEFAULT_COUNT_CAP_N) -> int:
    """Exact |L(n, k)|.

    Membership depends only on the two derivatives and the derivative map is
    exactly 2-to-1, so every derivative pair stands for 4 word pairs.
    """
    if n > cap_n:
        raise ResourceLimitError("count_L", 4**n, 4**cap_n)
    if not 1 <= k < n:
        raise InvalidArgument(f"need 1 <= k < n, got k={k}, n={n}")
    ds = np.arange(1 << (n - 1), dtype=np.int64)
    total = 0
    for da in ds:
        total += int(in_L_ints(da, ds, n, k).sum())
    return 4 * total


def p_plus_mask(rows: Sequence[np.ndarray], n: int, k: int) -> np.ndarray:
    """P+ membership for integer-encoded matrices given row arrays x_1..x_l."""
    rows = [np.asarray(r, dtype=np.int64) for r in rows]
    z = rows[0].copy()
    for r in rows[1:]:
        z = z ^ r
    ds = [derivative_ints(r, n) for r in rows + [z]]
    ok = np.ones(rows[0].shape, dtype=bool)
    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            ok &= in_L_ints(ds[i], ds[j], n, k)
    return ok


def all_two_row_matrices(n: int) -> tuple:
    idx = np.arange(1 << (2 * n), dtype=np.int64)
    return idx >> n, idx & ((1 << n) - 1)


def count_P_plus(ell: int, n: int, k: int, cap_bits: int = 24) -> int:
    """Exact |P+_l(n, k)| by enumerating every l x n matrix."""
    if ell * n > cap_bits:
        raise ResourceLimitError("count_P_plus", 2**(ell * n), 2**cap_bits)
    idx = np.arange(1 << (ell * n), dtype=np.int64)
    mask = (1 << n) - 1
    rows = [(idx >> (n * (ell - 1 - r))) & mask for r in range(ell)]
    return int(p_plus_mask(rows, n, k).sum())
