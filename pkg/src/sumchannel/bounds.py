"""Upper bounds on code size: clique covers of the confusability graph,
sphere packing, and exact optima on tiny instances.

Vertices of the 2 x n graph are integers x1 << n | x2, which sorts them in
lexicographic matrix order.  l x n matrices use the same row-major packing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .bits import BitWord, CodeMatrix
from .channel import ball_packed, sum_matrix
from .constructions import Construction4Params, c4_size
from .errors import InvalidArgument, ResourceLimitError

COVER_CAP_N = 8
MIS_CAP_BITS = 10
MIS_NODE_CAP = 2_000_000


def matrix_from_vertex(v: int, ell: int, n: int) -> CodeMatrix:
    mask = (1 << n) - 1
    return CodeMatrix([BitWord.from_int((v >> (n * (ell - 1 - r))) & mask, n) for r in range(ell)])


def vertex_from_matrix(X) -> int:
    v = 0
    for row in CodeMatrix(X):
        v = (v << len(row)) | row.to_int()
    return v


# -- the two-deletion cover ------------------------------------------------

def unit_block(j: int, b: int, k: int) -> int:
    """e_j of length k as an int (position 1 is the top bit), complemented if b = 1."""
    e = 1 << (k - j)
    return e ^ ((1 << k) - 1) if b else e


def lambda_k(k: int) -> set:
    """Block pairs (e_j^(b1), e_j^(b2)) as (int, int) tuples."""
    return {(unit_block(j, b1, k), unit_block(j, b2, k))
            for j in range(1, k + 1) for b1 in (0, 1) for b2 in (0, 1)}


def lambda_tilde_size(k: int) -> int:
    """|F_2^k x F_2^k minus Lambda_k|.  Equals 4^k - 4k except at k = 2,
    where e_1 and e_2 are each other's complements and |Lambda_2| = 4."""
    return 4**k - len(lambda_k(k))


def _block_cliques(k: int) -> list:
    """Distinct sets {(e_j^(b1), e_j^(b2)) : j} over (b1, b2), as sorted tuples."""
    out = []
    for b1 in (0, 1):
        for b2 in (0, 1):
            q = tuple(sorted((unit_block(j, b1, k), unit_block(j, b2, k)) for j in range(1, k + 1)))
            if q not in out:
                out.append(q)
    return out


@dataclass
class CliqueCover:
    n: int
    k: Optional[int]
    singletons: list = field(default_factory=list)
    cliques: list = field(default_factory=list)
    kind: str = "D"
    t: int = 2

    @property
    def sets(self) -> list:
        return [(v,) for v in self.singletons] + list(self.cliques)

    def __len__(self) -> int:
        return len(self.singletons) + len(self.cliques)


def _join(blocks: Sequence[int], k: int) -> int:
    v = 0
    for b in blocks:
        v = (v << k) | b
    return v


def build_clique_cover_2del(n: int, k: int, cap_n: int = COVER_CAP_N) -> CliqueCover:
    """Singletons over (Lambda~_k)^m plus, for each prefix u in (Lambda~_k)^(i-1),
    block i in Lambda_k and arbitrary suffix w, the cliques obtained by sliding
    the unit vector inside block i.  Identical sets are emitted once."""
    if k < 1 or n % k:
        raise InvalidArgument(f"k={k} must divide n={n}")
    if n > cap_n:
        raise ResourceLimitError("clique cover construction", 4**n, 4**cap_n)
    m = n // k
    lam = lambda_k(k)
    tilde = [(a, b) for a in range(1 << k) for b in range(1 << k) if (a, b) not in lam]
    cover = CliqueCover(n, k)

    def prefixes(length):
        out = [((), ())]
        for _ in range(length):
            out = [(u1 + (a,), u2 + (b,)) for u1, u2 in out for a, b in tilde]
        return out

    for u1, u2 in prefixes(m):
        cover.singletons.append((_join(u1, k) << n) | _join(u2, k))
    block_cliques = _block_cliques(k)
    for i in range(1, m + 1):
        tail = k * (m - i)
        for u1, u2 in prefixes(i - 1):
            p1, p2 = _join(u1, k), _join(u2, k)
            for w1 in range(1 << tail):
                for w2 in range(1 << tail):
                    for q in block_cliques:
                        cover.cliques.append(tuple(sorted(
                            (((((p1 << k) | a) << tail) | w1) << n) | ((((p2 << k) | b) << tail) | w2)
                            for a, b in q)))
    cover.singletons.sort()
    cover.cliques.sort()
    return cover


def clique_cover_size_formula(n: int, k: int) -> int:
    """|Q(n, k)| = |L~|^m + (4^n - |L~|^m) / k with the exact |L~| = |Lambda~_k|."""
    if k < 1 or n % k:
        raise InvalidArgument(f"k={k} must divide n={n}")
    s = lambda_tilde_size(k) ** (n // k)
    value = Fraction(s) + Fraction(4**n - s, k)
    assert value.denominator == 1
    return int(value)


def clique_cover_size_closed_form(n: int, k: int) -> Fraction:
    """The same count written with |Lambda_k| = 4k.  Agrees with
    :func:`clique_cover_size_formula` for every k except 2."""
    if k < 1 or n % k:
        raise InvalidArgument(f"k={k} must divide n={n}")
    f = (1 - Fraction(4 * k, 4**k)) ** (n // k)
    return 4**n * (f + (1 - f) / k)


def first_lambda_block(v: int, n: int, k: int) -> Optional[int]:
    """1-based index of the leftmost block pair lying in Lambda_k, or None."""
    lam = lambda_k(k)
    x1, x2 = v >> n, v & ((1 << n) - 1)
    mask = (1 << k) - 1
    for i in range(1, n // k + 1):
        shift = n - i * k
        if ((x1 >> shift) & mask, (x2 >> shift) & mask) in lam:
            return i
    return None


class _BallCache:
    def __init__(self, ell: int, n: int, t: int, kind: str):
        self.ell, self.n, self.t, self.kind = ell, n, t, kind
        self.cache: dict = {}

    def __call__(self, v: int) -> set:
        b = self.cache.get(v)
        if b is None:
            rows = sum_matrix(matrix_from_vertex(v, self.ell, self.n)).rows
            b = self.cache[v] = ball_packed(rows, self.t, self.kind)
        return b


@dataclass
class CoverCheck:
    ok: bool
    uncovered: Optional[int] = None
    non_clique: Optional[tuple] = None
    pairs_checked: int = 0

    def __bool__(self):
        return self.ok


def verify_clique_cover(cover: CliqueCover, check_cliques: bool = True,
                        cap_n: int = COVER_CAP_N) -> CoverCheck:
    """Coverage of all 4^n vertices and, optionally, pairwise ball
    intersection inside every set.  Failures carry a witness."""
    n = cover.n
    if n > cap_n:
        raise ResourceLimitError("clique cover verification", 4**n, 4**cap_n)
    seen = bytearray(1 << (2 * n))
    for s in cover.sets:
        for v in s:
            seen[v] = 1
    missing = seen.find(0)
    if missing >= 0:
        return CoverCheck(False, uncovered=missing)
    pairs = 0
    if check_cliques:
        ball = _BallCache(2, n, cover.t, cover.kind)
        for q in cover.cliques:
            for a in range(len(q)):
                for b in range(a + 1, len(q)):
                    pairs += 1
                    if ball(q[a]).isdisjoint(ball(q[b])):
                        return CoverCheck(False, non_clique=(q[a], q[b]), pairs_checked=pairs)
    return CoverCheck(True, pairs_checked=pairs)


@dataclass
class BoundReport:
    name: str
    value: int
    formula_ref: str
    regime: dict
    extras: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"schema": 1, "name": self.name, "value": str(self.value),
                "formula_ref": self.formula_ref, "regime": self.regime, **self.extras}


def upper_bound_A_2del(n: int) -> BoundReport:
    """min over divisors k of n of the exact cover size, next to the
    asymptotic closed form 12 * 4^n / log2 n (floating point, display only)."""
    if n < 1:
        raise InvalidArgument("n must be positive")
    values = {k: clique_cover_size_formula(n, k) for k in range(1, n + 1) if n % k == 0}
    best_k = min(values, key=lambda k: (values[k], k))
    value = values[best_k]
    extras = {"k": best_k, "per_k": {str(k): str(v) for k, v in values.items()}}
    if n > 1:
        closed = 12 / math.log2(n)  # in units of 4^n
        extras["closed_form_over_4n"] = closed
        extras["closed_form_looser"] = closed > value / 4**n
    return BoundReport(
        "A_2del_upper", value,
        "clique cover |L~_k|^m + (4^n - |L~_k|^m)/k minimized over k | n",
        {"l": 2, "n": n, "t": 2, "kind": "D"}, extras)


# -- the single-edit cover -----------------------------------------------------

def build_clique_cover_edit(n: int, cap_n: int = COVER_CAP_N) -> CliqueCover:
    """Group matrices by their first n-1 columns; each group of four differs
    only in the last column."""
    if n < 1:
        raise InvalidArgument("n must be positive")
    if n > cap_n:
        raise ResourceLimitError("edit clique cover", 4**n, 4**cap_n)
    cover = CliqueCover(n, None, kind="S", t=1)
    for x1 in range(1 << (n - 1)):
        for x2 in range(1 << (n - 1)):
            cover.cliques.append(tuple(sorted(
                (((x1 << 1) | a) << n) | ((x2 << 1) | b) for a in (0, 1) for b in (0, 1))))
    return cover


def sphere_packing_edit_bound(ell: int, n: int) -> int:
    """floor(2^(nl) / (l+1)): each ball holds (l+1)n outputs with exactly one
    odd column, out of n * 2^(ln) such outputs."""
    if ell < 1 or n < 1:
        raise InvalidArgument("l and n must be positive")
    return 2 ** (n * ell) // (ell + 1)


def substitution_sphere_size(X) -> int:
    """|B^S_1(X) minus {X+}| computed from the ball itself."""
    rows = sum_matrix(X).rows
    return len(ball_packed(rows, 1, "S")) - 1


def edit_bound_table(ell: int, ns: Sequence[int]) -> list:
    out = []
    for n in ns:
        out.append({"l": ell, "n": n, "sphere_packing": sphere_packing_edit_bound(ell, n),
                    "construction4": c4_size(Construction4Params(ell, n))})
    return out


def twodel_cover_table(ns: Sequence[int], verify_cap_n: int = COVER_CAP_N) -> list:
    """Formula against constructed cover size for every divisor k >= 2."""
    out = []
    for n in ns:
        for k in range(2, n + 1):
            if n % k:
                continue
            row = {"n": n, "k": k, "value": clique_cover_size_formula(n, k),
                   "closed_form_4k": clique_cover_size_closed_form(n, k)}
            if n <= verify_cap_n:
                row["constructed"] = len(build_clique_cover_2del(n, k, verify_cap_n))
            out.append(row)
    return out


# -- exact maximum codes ---------------------------------------------------------

def confusability_graph(ell: int, n: int, t: int, kind: str,
                        cap_bits: int = MIS_CAP_BITS) -> list:
    """Adjacency bitsets: bit u of adj[v] is set when the balls of u != v meet."""
    if ell * n > cap_bits:
        raise ResourceLimitError("confusability graph", 2 ** (ell * n), 2**cap_bits)
    N = 1 << (ell * n)
    owners: dict = {}
    for v in range(N):
        rows = sum_matrix(matrix_from_vertex(v, ell, n)).rows
        for key in ball_packed(rows, t, kind):
            owners.setdefault(key, []).append(v)
    adj = [0] * N
    for group in owners.values():
        if len(group) > 1:
            bits = 0
            for v in group:
                bits |= 1 << v
            for v in group:
                adj[v] |= bits
    for v in range(N):
        adj[v] &= ~(1 << v)
    return adj


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def max_independent_set(adj: Sequence[int], node_cap: int = MIS_NODE_CAP) -> list:
    """Exact maximum independent set by branch and bound.

    Candidates are greedily partitioned into cliques of the graph (independent
    sets of the complement); an independent set takes at most one vertex per
    clique, which bounds every branch.  Sparse graphs give weak bounds, so the
    number of search nodes is capped.
    """
    N = len(adj)
    best: list = []
    nodes = 0

    def clique_partition(cand: int) -> list:
        # returns [(vertex, bound)] with bounds non-decreasing
        order = []
        colour = 0
        rest = cand
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append((v, colour))
                rest &= ~(1 << v)
                avail &= adj[v]  # remaining members must be adjacent to all chosen ones
                avail &= rest
        return order

    def expand(chosen: list, cand: int):
        nonlocal best, nodes
        nodes += 1
        if nodes > node_cap:
            raise ResourceLimitError("independent set search nodes", nodes, node_cap)
        order = clique_partition(cand)
        for v, bound in reversed(order):
            if len(chosen) + bound <= len(best):
                return
            chosen.append(v)
            nxt = cand & ~adj[v] & ~(1 << v)
            if nxt:
                expand(chosen, nxt)
            elif len(chosen) > len(best):
                best = list(chosen)
            chosen.pop()
            cand &= ~(1 << v)

    expand([], (1 << N) - 1)
    return sorted(best)


def exact_max_code(ell: int, n: int, t: int, kind: str,
                   cap_bits: int = MIS_CAP_BITS, node_cap: int = MIS_NODE_CAP) -> tuple:
    """(A, witness code) where A is the largest (l; t) code for the error type."""
    adj = confusability_graph(ell, n, t, kind, cap_bits)
    best = max_independent_set(adj, node_cap)
    return len(best), [matrix_from_vertex(v, ell, n) for v in best]
