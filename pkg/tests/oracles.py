"""Brute-force reference implementations, written without the package's
fast paths (strings and plain loops only).  Tests compare the library
against these."""

from itertools import product


def bits(s):
    return tuple(int(ch) for ch in s)


def words(n):
    return ["".join(p) for p in product("01", repeat=n)]


def xor(a, b):
    return "".join("1" if x != y else "0" for x, y in zip(a, b))


def sum_rows(rows):
    z = rows[0]
    for r in rows[1:]:
        z = xor(z, r)
    return list(rows) + [z]


def deriv(w):
    return "".join("1" if w[i] != w[i + 1] else "0" for i in range(len(w) - 1))


def in_L(a, b, k):
    n = len(a)
    da, db = deriv(a), deriv(b)
    for i in range(1, n - k + 1):
        for d in (-1, 0, 1):
            j = i + d
            if 1 <= j and j + k - 1 <= n - 1 and da[i - 1:i - 1 + k] == db[j - 1:j - 1 + k]:
                return False
    return True


def in_P_plus(rows, k):
    r = sum_rows(rows)
    return all(in_L(r[i], r[j], k) for i in range(len(r)) for j in range(i + 1, len(r)))


def row_edits(w, kind):
    out = set()
    if "S" in kind:
        for i in range(len(w)):
            out.add(w[:i] + ("1" if w[i] == "0" else "0") + w[i + 1:])
    if "D" in kind:
        for i in range(len(w)):
            out.add(w[:i] + w[i + 1:])
    if "I" in kind:
        for i in range(len(w) + 1):
            for v in "01":
                out.add(w[:i] + v + w[i:])
    return out


def ball(rows, t, kind):
    """Up-to-t errors of ``kind`` on the sum matrix of ``rows`` (strings)."""
    start = tuple(sum_rows(list(rows)))
    seen = {start}
    frontier = {start}
    for _ in range(t):
        nxt = set()
        for m in frontier:
            for r in range(len(m)):
                for w in row_edits(m[r], kind):
                    nxt.add(m[:r] + (w,) + m[r + 1:])
        nxt -= seen
        seen |= nxt
        frontier = nxt
    return seen


def syn(w, q):
    return sum(j for j, ch in enumerate(w, start=1) if ch == "1") % q


def svt_candidates(y, n, P, c, b, lo, hi, modulus):
    """Every SVT codeword x with a deletion position in [lo, hi] giving y."""
    out = set()
    for pos in range(1, n + 1):
        for v in "01":
            x = y[:pos - 1] + v + y[pos - 1:]
            if syn(x, modulus) != c or x.count("1") % 2 != b:
                continue
            # some deletion inside the window must produce y
            if any(x[:q - 1] + x[q:] == y for q in range(max(lo, 1), min(hi, n) + 1)):
                out.add(x)
    return out


def max_independent_set_size(vertices, adjacent):
    """Exhaustive MIS over a tiny vertex list by simple recursion."""
    best = 0

    def go(i, chosen):
        nonlocal best
        if len(chosen) + (len(vertices) - i) <= best:
            return
        if i == len(vertices):
            best = max(best, len(chosen))
            return
        v = vertices[i]
        if all(not adjacent(v, u) for u in chosen):
            go(i + 1, chosen + [v])
        go(i + 1, chosen)

    go(0, [])
    return best
