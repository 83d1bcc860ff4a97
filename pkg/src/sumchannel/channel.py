"""The sum channel: sum matrices, error injection and exact error balls.

Error balls are the correctness oracle for every construction, so they are
computed by plain enumeration and returned as deduplicated, canonically
sorted collections.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .bits import (
    BitWord,
    CodeMatrix,
    ReceivedMatrix,
    delete_at,
    insert_at,
    xor_rows,
)
from .errors import InvalidArgument, ResourceLimitError

ERROR_TYPES = ("S", "D", "I", "ID", "SID")
DEFAULT_BALL_CAP = 10**7


@dataclass(frozen=True)
class SumMatrix:
    base: CodeMatrix
    parity_row: BitWord

    @property
    def rows(self) -> tuple:
        return tuple(self.base) + (self.parity_row,)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)


@dataclass(frozen=True)
class ErrorEvent:
    row: int
    kind: str  # "substitute" | "delete" | "insert"
    position: int
    value: Optional[int] = None

    def to_json(self) -> dict:
        d = {"row": self.row, "kind": self.kind, "position": self.position}
        if self.value is not None:
            d["value"] = self.value
        return d

    @classmethod
    def from_json(cls, d: dict) -> "ErrorEvent":
        return cls(d["row"], d["kind"], d["position"], d.get("value"))


def _check_kind(kind: str) -> str:
    if kind not in ERROR_TYPES:
        raise InvalidArgument(f"unknown error type {kind!r}; expected one of {ERROR_TYPES}")
    return kind


def sum_matrix(X) -> SumMatrix:
    X = X if isinstance(X, CodeMatrix) else CodeMatrix(X)
    return SumMatrix(X, xor_rows(X, X.n))


def _apply_to_rows(rows: list, events: Iterable[ErrorEvent]) -> list:
    rows = list(rows)
    for ev in events:
        if not 1 <= ev.row <= len(rows):
            raise InvalidArgument(f"event row {ev.row} outside [1, {len(rows)}]")
        r = rows[ev.row - 1]
        if ev.kind == "substitute":
            if ev.value not in (None, 0, 1):
                raise InvalidArgument(f"bad substitute value {ev.value!r}")
            if not 1 <= ev.position <= len(r):
                raise InvalidArgument(f"substitute position {ev.position} outside [1, {len(r)}]")
            value = 1 - r[ev.position - 1] if ev.value is None else ev.value
            rows[ev.row - 1] = BitWord._raw(r[:ev.position - 1] + (value,) + r[ev.position:])
        elif ev.kind == "delete":
            rows[ev.row - 1] = delete_at(r, ev.position)
        elif ev.kind == "insert":
            if ev.value not in (0, 1):
                raise InvalidArgument("insert events need a value in {0, 1}")
            rows[ev.row - 1] = insert_at(r, ev.position, ev.value)
        else:
            raise InvalidArgument(f"unknown event kind {ev.kind!r}")
    return rows


def apply_errors(Xplus: SumMatrix, events: Iterable[ErrorEvent]) -> ReceivedMatrix:
    """Apply events in order; a substitute event without a value flips the bit."""
    return ReceivedMatrix(_apply_to_rows(Xplus.rows, events))


def _one_step(w: tuple, kind: str) -> set:
    out = set()
    n = len(w)
    if "S" in kind:
        for i in range(n):
            out.add(w[:i] + (1 - w[i],) + w[i + 1:])
    if "D" in kind:
        for i in range(n):
            out.add(w[:i] + w[i + 1:])
    if "I" in kind:
        for i in range(n + 1):
            out.add(w[:i] + (0,) + w[i:])
            out.add(w[:i] + (1,) + w[i:])
    return out


@lru_cache(maxsize=1 << 16)
def row_ball(w: tuple, s: int, kind: str) -> frozenset:
    """All words reachable from ``w`` by at most ``s`` errors of ``kind``."""
    seen = {tuple(w)}
    frontier = set(seen)
    for _ in range(s):
        nxt = set()
        for u in frontier:
            nxt |= _one_step(u, kind)
        nxt -= seen
        seen |= nxt
        frontier = nxt
    return frozenset(seen)


def _compositions(t: int, parts: int):
    # all (s_1..s_parts) >= 0 with sum exactly t
    for cut in itertools.combinations(range(t + parts - 1), parts - 1):
        prev = -1
        out = []
        for c in cut + (t + parts - 1,):
            out.append(c - prev - 1)
            prev = c
        yield tuple(out)


def _ball_keys(rows: Sequence[tuple], t: int, kind: str, cap: int) -> set:
    """Raw ball: a set of tuples of row tuples."""
    if t < 0:
        raise InvalidArgument("t must be non-negative")
    per_row = [[row_ball(tuple(r), s, kind) for s in range(t + 1)] for r in rows]
    comps = list(_compositions(t, len(rows)))
    total = 0
    for comp in comps:
        size = 1
        for i, s in enumerate(comp):
            size *= len(per_row[i][s])
        total += size
    if total > cap:
        raise ResourceLimitError("error ball enumeration", total, cap)
    out = set()
    for comp in comps:
        # the "up to" sets are nested, so exact-t compositions cover every s <= t
        out.update(itertools.product(*(per_row[i][s] for i, s in enumerate(comp))))
    return out


def _canonical(keys) -> list:
    return [tuple.__new__(ReceivedMatrix, (BitWord._raw(r) for r in k)) for k in sorted(keys)]


def _pack_row(w: tuple) -> int:
    # leading sentinel bit keeps the length
    v = 1
    for b in w:
        v = (v << 1) | b
    return v


def _unpack_row(v: int) -> BitWord:
    return BitWord._raw(int(c) for c in bin(v)[3:])


@lru_cache(maxsize=1 << 16)
def _row_ball_packed(w: tuple, s: int, kind: str) -> frozenset:
    return frozenset(_pack_row(u) for u in row_ball(w, s, kind))


def ball_packed(rows: Sequence[tuple], t: int, kind: str, cap: int = DEFAULT_BALL_CAP) -> set:
    """The ball as a set of ints, one fixed-width sentinel field per row.

    Much lighter than tuples when millions of outputs are kept at once.
    The field width depends on the row lengths and on t, so only compare
    keys produced with the same t.
    """
    if t < 0:
        raise InvalidArgument("t must be non-negative")
    width = max(len(r) for r in rows) + t + 2
    per_row = [[_row_ball_packed(tuple(r), s, kind) for s in range(t + 1)] for r in rows]
    comps = list(_compositions(t, len(rows)))
    total = sum(_prod(len(per_row[i][s]) for i, s in enumerate(c)) for c in comps)
    if total > cap:
        raise ResourceLimitError("error ball enumeration", total, cap)
    out = set()
    for comp in comps:
        partial = {0}
        for i, s in enumerate(comp):
            shift = width * i
            partial = {acc | (v << shift) for acc in partial for v in per_row[i][s]}
        out |= partial
    return out


def unpack_ball_key(key: int, rows: int, width: int) -> ReceivedMatrix:
    mask = (1 << width) - 1
    return tuple.__new__(ReceivedMatrix, (_unpack_row((key >> (width * i)) & mask) for i in range(rows)))


def _prod(it) -> int:
    out = 1
    for v in it:
        out *= v
    return out


def error_ball(X, t: int, kind: str, cap: int = DEFAULT_BALL_CAP) -> list:
    """Exact B^kind_t(X) as a sorted list of :class:`ReceivedMatrix`."""
    _check_kind(kind)
    return _canonical(_ball_keys(sum_matrix(X).rows, t, kind, cap))


def balls_intersect(X1, X2, t: int, kind: str, cap: int = DEFAULT_BALL_CAP) -> bool:
    _check_kind(kind)
    X1, X2 = CodeMatrix(X1), CodeMatrix(X2)
    if (X1.ell, X1.n) != (X2.ell, X2.n):
        raise InvalidArgument("matrices must have the same shape")
    if X1 == X2:
        return True
    a = ball_packed(sum_matrix(X1).rows, t, kind, cap)
    b = ball_packed(sum_matrix(X2).rows, t, kind, cap)
    return not a.isdisjoint(b)


@dataclass
class CodeCheck:
    ok: bool
    codewords: int
    outputs: int
    pair: Optional[tuple] = None
    common: Optional[ReceivedMatrix] = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        d = {"ok": self.ok, "codewords": self.codewords, "outputs": self.outputs}
        if self.pair is not None:
            d["pair"] = [[str(r) for r in m] for m in self.pair]
            d["common"] = [str(r) for r in self.common]
        return d


def is_correcting_code(codebook: Iterable, t: int, kind: str,
                       cap: int = DEFAULT_BALL_CAP) -> CodeCheck:
    """Check pairwise disjointness of the error balls of a codebook.

    Instead of intersecting every pair of balls, every output is mapped to
    the codeword that produced it; a second owner is a collision.  This is
    equivalent and linear in the total ball size.  ``cap`` bounds the total
    number of outputs held at once.
    """
    _check_kind(kind)
    code = sorted({CodeMatrix(X) for X in codebook})
    if len({(X.ell, X.n) for X in code}) > 1:
        raise InvalidArgument("codebook shapes are not uniform")
    owner: dict = {}
    total = 0
    for idx, X in enumerate(code):
        rows = sum_matrix(X).rows
        keys = ball_packed(rows, t, kind, cap)
        total += len(keys)
        if total > cap:
            raise ResourceLimitError("codebook ball enumeration", total, cap)
        clash = [k for k in keys if owner.setdefault(k, idx) != idx]
        if clash:
            key = min(clash)
            width = X.n + t + 2
            return CodeCheck(False, len(code), total, (code[owner[key]], X),
                             unpack_ball_key(key, len(rows), width))
    return CodeCheck(True, len(code), total)


_PARTITIONS = (
    ({"A", "C"}, {"G", "T"}),
    ({"A", "G"}, {"C", "T"}),
    ({"A", "T"}, {"C", "G"}),
)


def dna_partitions(strand: str) -> tuple:
    """The three binary reads of ECC sequencing; read 3 = read 1 + read 2."""
    if not strand:
        raise InvalidArgument("strand must be nonempty")
    words = [[], [], []]
    for pos, base in enumerate(strand.upper(), start=1):
        if base not in "ACGT":
            raise InvalidArgument(f"invalid base {base!r} at position {pos}")
        for p, (first, _) in enumerate(_PARTITIONS):
            words[p].append(0 if base in first else 1)
    return tuple(BitWord._raw(w) for w in words)


def strand_from_partitions(w1: Sequence[int], w2: Sequence[int]) -> str:
    """Invert the first two partitions (they determine the base)."""
    if len(w1) != len(w2):
        raise InvalidArgument("partition words must have equal length")
    table = {(0, 0): "A", (0, 1): "C", (1, 0): "G", (1, 1): "T"}
    return "".join(table[(a, b)] for a, b in zip(w1, w2))


def _draw_event(rng: random.Random, lengths: list, op: str) -> ErrorEvent:
    rows = len(lengths)
    if op == "insert":
        row = rng.randrange(rows) + 1
        return ErrorEvent(row, "insert", rng.randrange(lengths[row - 1] + 1) + 1, rng.randrange(2))
    # substitutions and deletions need a nonempty row
    choices = [(r + 1, p + 1) for r in range(rows) for p in range(lengths[r])]
    if not choices:
        raise InvalidArgument("no bits left to corrupt")
    row, pos = choices[rng.randrange(len(choices))]
    return ErrorEvent(row, op, pos)


_OPS = {"S": ("substitute",), "D": ("delete",), "I": ("insert",),
        "ID": ("insert", "delete"), "SID": ("substitute", "insert", "delete")}


def corrupt(X, t: int, kind: str, seed: int) -> tuple:
    """Inject exactly ``t`` random errors of ``kind``; deterministic in ``seed``.

    Substitutions always flip the chosen bit.  Returns (Y, events).
    """
    _check_kind(kind)
    if t < 0:
        raise InvalidArgument("t must be non-negative")
    rng = random.Random(seed)
    rows = list(sum_matrix(X).rows)
    events = []
    for _ in range(t):
        op = rng.choice(_OPS[kind])
        ev = _draw_event(rng, [len(r) for r in rows], op)
        if ev.kind == "substitute":
            ev = ErrorEvent(ev.row, ev.kind, ev.position, 1 - rows[ev.row - 1][ev.position - 1])
        rows = _apply_to_rows(rows, [ev])
        events.append(ev)
    return ReceivedMatrix(rows), events


def events_to_json(events: Sequence[ErrorEvent]) -> str:
    return json.dumps([e.to_json() for e in events])


def events_from_json(text: str) -> list:
    return [ErrorEvent.from_json(d) for d in json.loads(text)]
