"""Binary words and matrices.

Every external index is 1-based: position 1 is the leftmost bit of the text
form.  Words are immutable tuples of 0/1 ints so they hash and compare by
content; matrices are tuples of words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidArgument


class BitWord(tuple):
    """An immutable binary word."""

    __slots__ = ()

    def __new__(cls, bits: Iterable[int] | str = ()):
        if isinstance(bits, str):
            try:
                bits = [int(ch) for ch in bits.strip()]
            except ValueError:
                raise InvalidArgument(f"not a binary word: {bits!r}") from None
        word = super().__new__(cls, bits)
        for b in word:
            if b != 0 and b != 1:
                raise InvalidArgument(f"bit out of range: {b!r}")
        return word

    @classmethod
    def _raw(cls, bits) -> "BitWord":
        # trusted constructor, skips validation
        return tuple.__new__(cls, bits)

    @classmethod
    def zeros(cls, n: int) -> "BitWord":
        return cls._raw((0,) * n)

    @classmethod
    def unit(cls, j: int, n: int) -> "BitWord":
        """The j-th unit vector of length n (1-based)."""
        if not 1 <= j <= n:
            raise InvalidArgument(f"unit index {j} outside [1, {n}]")
        return cls._raw(1 if i == j else 0 for i in range(1, n + 1))

    @classmethod
    def from_int(cls, value: int, n: int) -> "BitWord":
        """Inverse of :meth:`to_int`; position 1 is the most significant bit."""
        return cls._raw((value >> (n - 1 - i)) & 1 for i in range(n))

    def to_int(self) -> int:
        v = 0
        for b in self:
            v = (v << 1) | b
        return v

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self)

    def __repr__(self) -> str:
        return f"BitWord('{self}')"

    def __add__(self, other):
        # '+' on words is bitwise XOR, as in the sum channel; use concat() to join
        if len(self) != len(other):
            raise InvalidArgument(f"length mismatch: {len(self)} vs {len(other)}")
        return BitWord._raw(a ^ b for a, b in zip(self, other))

    __xor__ = __add__


def _word(x) -> BitWord:
    return x if isinstance(x, BitWord) else BitWord(x)


def parity(x: Sequence[int]) -> int:
    return sum(x) & 1


def derivative(x: Sequence[int]) -> BitWord:
    if len(x) < 2:
        raise InvalidArgument("derivative needs a word of length >= 2")
    return BitWord._raw(x[i + 1] ^ x[i] for i in range(len(x) - 1))


def concat(*words: Sequence[int]) -> BitWord:
    out: tuple = ()
    for w in words:
        out += tuple(w)
    return BitWord(out)


def hamming_distance(x, y) -> int:
    """Hamming distance between equal-length words or equal-shape matrices."""
    if len(x) != len(y):
        raise InvalidArgument(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) and isinstance(x[0], tuple):
        return sum(hamming_distance(a, b) for a, b in zip(x, y))
    return sum(1 for a, b in zip(x, y) if a != b)


def subword(x: Sequence[int], i: int, j: int) -> BitWord:
    """The contiguous subword x[i:j], 1-based and inclusive."""
    if not 1 <= i <= j <= len(x):
        raise InvalidArgument(f"window [{i}, {j}] invalid for length {len(x)}")
    return BitWord._raw(x[i - 1:j])


def complement(x: Sequence[int]) -> BitWord:
    return BitWord._raw(1 - b for b in x)


@dataclass(frozen=True)
class Run:
    symbol: int
    start: int  # 1-based
    length: int

    @property
    def end(self) -> int:
        return self.start + self.length - 1


def runs(x: Sequence[int]) -> list[Run]:
    """Maximal-run decomposition of a nonempty word."""
    if len(x) == 0:
        raise InvalidArgument("runs of the empty word are undefined")
    out = []
    start = 0
    for i in range(1, len(x) + 1):
        if i == len(x) or x[i] != x[start]:
            out.append(Run(x[start], start + 1, i - start))
            start = i
    return out


def from_runs(rs: Iterable[Run]) -> BitWord:
    bits: list[int] = []
    for r in rs:
        bits.extend([r.symbol] * r.length)
    return BitWord._raw(bits)


def delete_at(x: Sequence[int], pos: int) -> BitWord:
    if not 1 <= pos <= len(x):
        raise InvalidArgument(f"delete position {pos} outside [1, {len(x)}]")
    return BitWord._raw(x[:pos - 1] + x[pos:])


def insert_at(x: Sequence[int], pos: int, value: int) -> BitWord:
    """Insert ``value`` so that it becomes position ``pos`` of the result."""
    if not 1 <= pos <= len(x) + 1:
        raise InvalidArgument(f"insert position {pos} outside [1, {len(x) + 1}]")
    return BitWord._raw(tuple(x[:pos - 1]) + (value,) + tuple(x[pos - 1:]))


def flip_at(x: Sequence[int], pos: int) -> BitWord:
    if not 1 <= pos <= len(x):
        raise InvalidArgument(f"substitute position {pos} outside [1, {len(x)}]")
    return BitWord._raw(x[:pos - 1] + (1 - x[pos - 1],) + x[pos:])


class CodeMatrix(tuple):
    """An l x n binary matrix, stored as a tuple of equal-length rows."""

    __slots__ = ()

    def __new__(cls, rows):
        if isinstance(rows, str):
            rows = rows.split()
        m = super().__new__(cls, (_word(r) for r in rows))
        if len(m) == 0:
            raise InvalidArgument("a code matrix needs at least one row")
        n = len(m[0])
        if n == 0 or any(len(r) != n for r in m):
            raise InvalidArgument("code matrix rows must share a positive length")
        return m

    @property
    def ell(self) -> int:
        return len(self)

    @property
    def n(self) -> int:
        return len(self[0])

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self)

    def __repr__(self) -> str:
        return f"CodeMatrix({[str(r) for r in self]})"


class ReceivedMatrix(tuple):
    """A channel output: rows of possibly different lengths."""

    __slots__ = ()

    def __new__(cls, rows):
        if isinstance(rows, str):
            rows = rows.split("\n")
        return super().__new__(cls, (_word(r) for r in rows))

    @property
    def lengths(self) -> tuple:
        return tuple(len(r) for r in self)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self)

    def __repr__(self) -> str:
        return f"ReceivedMatrix({[str(r) for r in self]})"


def xor_rows(rows: Iterable[Sequence[int]], n: int) -> BitWord:
    acc = [0] * n
    for r in rows:
        if len(r) != n:
            raise InvalidArgument(f"row length {len(r)} != {n}")
        for i, b in enumerate(r):
            acc[i] ^= b
    return BitWord._raw(acc)


def format_matrices(matrices: Iterable[Sequence[Sequence[int]]]) -> str:
    """Text form: one row per line, records separated by a blank line."""
    blocks = ["\n".join(str(BitWord._raw(r)) or "-" for r in m) for m in matrices]
    return "\n\n".join(blocks) + "\n"


def parse_matrices(text: str) -> list[ReceivedMatrix]:
    """Parse the text form; empty rows (fully deleted) are written as '-'."""
    records = []
    for block in text.strip("\n").split("\n\n"):
        lines = [ln.strip() for ln in block.splitlines() if ln.strip()]
        if not lines:
            continue
        records.append(ReceivedMatrix(["" if ln == "-" else ln for ln in lines]))
    return records
