import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles as O
from sumchannel.bits import BitWord, CodeMatrix, complement, derivative
from sumchannel.errors import InvalidArgument, ResourceLimitError
from sumchannel.misalignment import (
    simplified_bound_P_plus,
    count_L,
    count_P_plus,
    derivative_ints,
    in_L,
    in_L_ints,
    in_P_plus,
    l_violation,
    lower_bound_L,
    lower_bound_P_plus,
    shift_ambiguous,
)

A, B = BitWord("1110110"), BitWord("1010010")


def all_words(n):
    return [BitWord(p) for p in itertools.product((0, 1), repeat=n)]


def test_pinned_examples():
    assert in_L(A, B, 5)
    assert not in_L(A, B, 4)
    assert l_violation(A, B, 4) == (3, -1)
    assert derivative(A)[2:6] == derivative(B)[1:5] == BitWord("1101")
    assert not in_L(A, A, 3)


def test_argument_errors():
    with pytest.raises(InvalidArgument):
        in_L(A, BitWord("101"), 2)
    with pytest.raises(InvalidArgument):
        in_L(A, B, 7)


def test_p_plus_examples():
    assert not in_P_plus(CodeMatrix(["10110", "10110"]), 2)
    for x in all_words(5):
        assert not in_P_plus(CodeMatrix([x]), 3)


def test_p_plus_count_frozen():
    # frozen from the string oracle: filter all 2^14 matrices
    assert count_P_plus(2, 7, 5) == 11424
    assert count_L(7, 5) == 14648


@pytest.mark.parametrize("n", range(3, 8))
def test_count_L_against_oracle(n):
    ws = ["".join(p) for p in itertools.product("01", repeat=n)]
    for k in range(1, n):
        assert count_L(n, k) == sum(O.in_L(a, b, k) for a in ws for b in ws)


def test_count_cap():
    with pytest.raises(ResourceLimitError):
        count_L(12, 5)
    with pytest.raises(ResourceLimitError):
        count_P_plus(3, 9, 5)


def test_vectorized_matches_scalar():
    n = 6
    ws = all_words(n)
    ints = [w.to_int() for w in ws]
    import numpy as np
    d = derivative_ints(np.array(ints), n)
    for k in range(1, n):
        for i, a in enumerate(ws):
            mask = in_L_ints(d[i], d, n, k)
            assert list(mask) == [in_L(a, b, k) for b in ws]


@pytest.mark.parametrize("n", range(2, 10))
def test_symmetry_complement_monotone(n):
    ws = all_words(n) if n <= 7 else all_words(n)[::5]
    for a in ws[::3]:
        for b in ws:
            for k in range(1, n):
                v = in_L(a, b, k)
                assert v == in_L(b, a, k)
                assert v == in_L(a, complement(b), k)
                if v and k + 1 < n:
                    assert in_L(a, b, k + 1)


def test_shift_ambiguous_example():
    assert shift_ambiguous(BitWord("0110"), BitWord("1001"), 1, 0)
    w = BitWord("0110")
    assert shift_ambiguous(w, w, 1, 1)


@pytest.mark.parametrize("k", range(2, 9))
def test_shift_ambiguity_implies_equal_derivatives(k):
    ws = all_words(k)
    for w1 in ws:
        for w2 in ws:
            for v1, v2 in itertools.product((0, 1), repeat=2):
                if shift_ambiguous(w1, w2, v1, v2):
                    assert derivative(w1) == derivative(w2)


def test_lower_bounds_exact():
    assert lower_bound_L(7, 5) == 13312
    assert lower_bound_P_plus(2, 7, 5) == Fraction(2**14) * Fraction(26, 32) ** 3
    assert lower_bound_P_plus(1, 7, 5) == lower_bound_L(7, 5) / 2**7
    assert lower_bound_L(6, 5) == Fraction(4**6) * (1 - Fraction(3, 2**5))
    assert lower_bound_L(10, 2) < 0
    assert simplified_bound_P_plus(2, 8, 3) == 2**16 * Fraction(5, 8) ** 4


def test_counts_dominate_bounds():
    for n in range(2, 11):
        for k in range(1, n):
            lb = lower_bound_L(n, k)
            if lb > 0:
                assert count_L(n, k) >= lb
    for n in range(2, 9):
        for k in range(1, n):
            lb = lower_bound_P_plus(2, n, k)
            if lb > 0:
                assert count_P_plus(2, n, k) >= lb


@given(st.integers(3, 12).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, 1), min_size=n, max_size=n),
    st.lists(st.integers(0, 1), min_size=n, max_size=n),
    st.integers(1, n - 1))))
def test_in_L_matches_oracle(args):
    a, b, k = args
    sa, sb = "".join(map(str, a)), "".join(map(str, b))
    assert in_L(BitWord(a), BitWord(b), k) == O.in_L(sa, sb, k)
