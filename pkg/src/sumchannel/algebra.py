"""Component codes: weighted syndromes, shifted VT codes, GF(2^m), a
two-check MDS erasure code and shortened Hamming cosets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .bits import BitWord, parity
from .errors import AmbiguityError, DecodeFailure, InvalidArgument


def syndrome(x: Sequence[int], q: int) -> int:
    """Weighted syndrome sum_j j*x_j mod q (positions are 1-based)."""
    if q < 2:
        raise InvalidArgument(f"syndrome modulus must be >= 2, got {q}")
    return sum(j for j, b in enumerate(x, start=1) if b) % q


@dataclass(frozen=True)
class SVTParams:
    """SVT_{c,b}(n, P) with an explicit syndrome modulus (defaults to P)."""

    n: int
    P: int
    c: int
    b: int
    modulus: int = 0

    def __post_init__(self):
        if self.modulus == 0:
            object.__setattr__(self, "modulus", max(self.P, 2))
        if self.modulus < 2:
            raise InvalidArgument("SVT modulus must be >= 2")
        if self.modulus < self.P:
            raise InvalidArgument(f"modulus {self.modulus} smaller than window {self.P}")
        if not 0 <= self.c < self.modulus:
            raise InvalidArgument(f"c={self.c} outside [0, {self.modulus})")
        if self.b not in (0, 1):
            raise InvalidArgument("b must be a bit")


def svt_member(x: Sequence[int], p: SVTParams) -> bool:
    if len(x) != p.n:
        raise InvalidArgument(f"word length {len(x)} != n={p.n}")
    return syndrome(x, p.modulus) == p.c and parity(x) == p.b


def svt_decode(y: Sequence[int], p: SVTParams, window: tuple) -> BitWord:
    """Undo one deletion whose position is known to lie in ``window``.

    ``window`` is (lo, hi), 1-based and inclusive, in coordinates of the
    original word.  The deleted value follows from the parity; the candidate
    insertion points lo..hi are deduplicated at run level and filtered by the
    syndrome.
    """
    n = p.n
    if len(y) != n - 1:
        raise InvalidArgument(f"received length {len(y)} != n-1={n - 1}")
    lo, hi = window
    hi = min(hi, n)
    lo = max(lo, 1)
    if lo > hi:
        raise InvalidArgument(f"empty window {window}")
    if hi - lo + 1 > p.P:
        raise InvalidArgument(f"window {window} longer than P={p.P}")
    v = (p.b + parity(y)) & 1
    y = tuple(y)
    # inserting v at q shifts positions >= q by one
    base = sum(j for j, bit in enumerate(y, start=1) if bit)
    ones_right = [0] * (n + 1)  # ones at positions >= q of y, for q = 1..n
    for q in range(n - 1, 0, -1):
        ones_right[q] = ones_right[q + 1] + y[q - 1]
    found = []
    for q in range(lo, hi + 1):
        if q > lo and y[q - 2] == v:
            continue  # same word as inserting one step to the left
        s = base + ones_right[q] + (q if v else 0)
        if s % p.modulus == p.c:
            found.append(q)
    if not found:
        raise DecodeFailure(f"no insertion in window {window} matches syndrome {p.c}")
    if len(found) > 1:
        raise AmbiguityError(f"insertions at {found} all match syndrome {p.c} mod {p.modulus}")
    q = found[0]
    return BitWord._raw(y[:q - 1] + (v,) + y[q - 1:])


# Primitive polynomials, one per degree; x is a generator of the multiplicative group.
PRIMITIVE_POLYS = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


class GaloisField:
    """GF(2^m) with log/antilog tables."""

    def __init__(self, m: int):
        if m not in PRIMITIVE_POLYS:
            raise InvalidArgument(f"field degree {m} not supported (1..16)")
        self.m = m
        self.poly = PRIMITIVE_POLYS[m]
        self.size = 1 << m
        order = self.size - 1
        self.exp = [0] * (2 * order)
        self.log = [0] * self.size
        x = 1
        for i in range(order):
            self.exp[i] = x
            self.log[x] = i
            x <<= 1
            if x & self.size:
                x ^= self.poly
        for i in range(order, 2 * order):
            self.exp[i] = self.exp[i - order]

    def __repr__(self):
        return f"GaloisField({self.m})"

    def __call__(self, value: int) -> "FieldElement":
        if not 0 <= value < self.size:
            raise InvalidArgument(f"{value} is not an element of GF(2^{self.m})")
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise InvalidArgument("zero has no inverse")
        return self.exp[(self.size - 1 - self.log[a]) % (self.size - 1)]

    def power_of_generator(self, i: int) -> "FieldElement":
        return FieldElement(self, self.exp[i % (self.size - 1)])

    def elements(self):
        return [FieldElement(self, v) for v in range(self.size)]


@lru_cache(maxsize=None)
def galois_field(m: int) -> GaloisField:
    return GaloisField(m)


class FieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field: GaloisField, value: int):
        self.field = field
        self.value = value

    def __repr__(self):
        return f"FieldElement(m={self.field.m}, 0x{self.value:x})"

    def _same(self, other: "FieldElement"):
        if self.field.m != other.field.m:
            raise InvalidArgument("elements of different fields")

    def __add__(self, other):
        self._same(other)
        return FieldElement(self.field, self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other):
        self._same(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        self._same(other)
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(other.value)))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        return (isinstance(other, FieldElement) and self.field.m == other.field.m
                and self.value == other.value)

    def __hash__(self):
        return hash((self.field.m, self.value))

    def bits(self) -> str:
        """Coefficient string, highest degree first."""
        return format(self.value, f"0{self.field.m}b")

    def __str__(self):
        return format(self.value, "x")


def gf_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def gf_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def gf_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def sigma(x: Sequence[int], h: int) -> FieldElement:
    """Pack (Syn_{2^h}(x), parity(x)) into GF(2^(h+1)): parity is the top bit."""
    if h < 1:
        raise InvalidArgument("h must be >= 1")
    return FieldElement(galois_field(h + 1), (parity(x) << h) | syndrome(x, 1 << h))


def sigma_parts(s: FieldElement, h: int) -> tuple:
    """Inverse of the packing in :func:`sigma`: returns (syndrome, parity)."""
    return s.value & ((1 << h) - 1), s.value >> h


ERASED = None


@dataclass(frozen=True)
class MDSCodeParams:
    """Coset {s : sum s_i = s0, sum alpha_i s_i = s1} of a length-l MDS code.

    alpha_i is g^(i-1) for the generator g = x of the field.
    """

    length: int
    m: int
    s0: int = 0
    s1: int = 0

    def __post_init__(self):
        gf = galois_field(self.m)
        if not 1 <= self.length <= gf.size - 1:
            raise InvalidArgument(f"length {self.length} exceeds {gf.size - 1} for GF(2^{self.m})")
        if not (0 <= self.s0 < gf.size and 0 <= self.s1 < gf.size):
            raise InvalidArgument("coset syndromes must be field elements")

    @property
    def field(self) -> GaloisField:
        return galois_field(self.m)

    @property
    def alphas(self) -> list:
        return [self.field.power_of_generator(i) for i in range(self.length)]

    def checks(self, symbols: Sequence[FieldElement]) -> tuple:
        gf = self.field
        c0, c1 = gf.zero, gf.zero
        for a, s in zip(self.alphas, symbols):
            c0 = c0 + s
            c1 = c1 + a * s
        return c0, c1

    def contains(self, symbols: Sequence[FieldElement]) -> bool:
        c0, c1 = self.checks(symbols)
        return c0.value == self.s0 and c1.value == self.s1


def mds_erasure_decode(symbols: Sequence[Optional[FieldElement]], p: MDSCodeParams) -> list:
    if len(symbols) != p.length:
        raise InvalidArgument(f"expected {p.length} symbols, got {len(symbols)}")
    erased = [i for i, s in enumerate(symbols) if s is ERASED]
    if len(erased) > 2:
        raise InvalidArgument(f"{len(erased)} erasures; at most 2 are correctable")
    gf = p.field
    alphas = p.alphas
    r0, r1 = gf(p.s0), gf(p.s1)
    for i, s in enumerate(symbols):
        if s is not ERASED:
            r0 = r0 + s
            r1 = r1 + alphas[i] * s
    out = list(symbols)
    if len(erased) == 1:
        (i,) = erased
        out[i] = r0
        r1 = r1 + alphas[i] * r0
        r0 = gf.zero
    elif len(erased) == 2:
        i, j = erased
        # s_i + s_j = r0, a_i s_i + a_j s_j = r1
        si = (r1 + alphas[j] * r0) / (alphas[i] + alphas[j])
        out[i], out[j] = si, r0 + si
        r0, r1 = gf.zero, gf.zero
    if r0 or r1:
        raise DecodeFailure("unerased symbols are inconsistent with the coset")
    return out


def hamming_check_bits(length: int) -> int:
    """r = ceil(log2(length + 1))."""
    return length.bit_length()


@dataclass(frozen=True)
class HammingParams:
    """Shortened Hamming coset; column i of the parity-check matrix is i in binary."""

    length: int
    syndrome: int = 0

    def __post_init__(self):
        if self.length < 1:
            raise InvalidArgument("length must be >= 1")
        if not 0 <= self.syndrome < (1 << self.r):
            raise InvalidArgument(f"coset syndrome must fit in {self.r} bits")

    @property
    def r(self) -> int:
        return hamming_check_bits(self.length)


def hamming_syndrome(b: Sequence[int]) -> int:
    s = 0
    for i, bit in enumerate(b, start=1):
        if bit:
            s ^= i
    return s


def hamming_member(b: Sequence[int], p: HammingParams) -> bool:
    return hamming_syndrome(b) == p.syndrome


def hamming_decode(b: Sequence[int], p: HammingParams) -> tuple:
    """Return (corrected word, flipped position or None)."""
    if len(b) != p.length:
        raise InvalidArgument(f"word length {len(b)} != {p.length}")
    e = hamming_syndrome(b) ^ p.syndrome
    if e == 0:
        return BitWord(b), None
    if e > p.length:
        raise DecodeFailure(f"syndrome {e} matches no column")
    fixed = list(b)
    fixed[e - 1] ^= 1
    return BitWord._raw(fixed), e


def hamming_coset(p: HammingParams) -> list:
    """All words of the coset, in increasing integer order."""
    n = p.length
    return [BitWord.from_int(v, n) for v in range(1 << n)
            if hamming_syndrome(BitWord.from_int(v, n)) == p.syndrome]
