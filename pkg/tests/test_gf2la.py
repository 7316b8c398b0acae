import random

import pytest
from hypothesis import given, strategies as st

from sdc.gf2la import (
    BitMatrix,
    BitVector,
    contains,
    is_rref,
    kernel,
    left_kernel,
    rank,
    reduce_rref,
    to_words,
    from_words,
)

from .oracles import span


def matrices(max_rows=6, max_cols=12):
    return st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.integers(0, (1 << n) - 1), max_size=max_rows).map(
            lambda rows: BitMatrix(n, tuple(rows))
        )
    )


def test_bitvector_string_roundtrip():
    v = BitVector.from_str("10110")
    assert v.bits == 0b01101
    assert str(v) == "10110"
    assert v.weight() == 3
    assert v.support() == [0, 2, 3]


def test_bitvector_rejects_padding_bits():
    with pytest.raises(ValueError):
        BitVector(3, 0b1000)


def test_bitvector_length_mismatch():
    with pytest.raises(ValueError):
        BitVector.from_str("10") ^ BitVector.from_str("100")


def test_rref_identity():
    m, piv = reduce_rref(BitMatrix.identity(3))
    assert m == BitMatrix.identity(3)
    assert piv == [0, 1, 2]


def test_rref_three_dependent_rows():
    m, piv = reduce_rref(BitMatrix.from_strs(["110", "011", "101"]))
    assert m.to_strs() == ["101", "011"]
    assert piv == [0, 1]
    assert span(m.rows, 3) == span(BitMatrix.from_strs(["110", "011", "101"]).rows, 3)


def test_rref_zero_matrix():
    m, piv = reduce_rref(BitMatrix(4, (0, 0)))
    assert m.nrows == 0 and m.cols == 4
    assert piv == []


def test_rank_examples():
    assert rank(BitMatrix.identity(4)) == 4
    assert rank(BitMatrix.from_strs(["1010", "1010"])) == 1


def test_rank_random_matches_rowspace_size():
    rng = random.Random(5)
    for _ in range(50):
        m = BitMatrix(8, tuple(rng.getrandbits(8) for _ in range(5)))
        assert 2 ** rank(m) == len(span(m.rows, 8))


def test_kernel_examples():
    assert kernel(BitMatrix.from_strs(["11"])).to_strs() == ["11"]
    assert kernel(BitMatrix.identity(5)).nrows == 0


def test_kernel_of_extended_hamming_is_itself():
    h = BitMatrix.from_strs(["11111111", "11110000", "11001100", "10101010"])
    ker = kernel(h)
    assert ker.nrows == 4
    assert span(ker.rows, 8) == span(h.rows, 8)


def test_contains_examples():
    m, _ = reduce_rref(BitMatrix.from_strs(["1100", "0011"]))
    assert contains(m, BitVector.from_str("1111"))
    assert not contains(m, BitVector.from_str("1000"))
    with pytest.raises(ValueError):
        contains(m, BitVector.from_str("11"))


def test_left_kernel():
    rows = [0b011, 0b110, 0b101, 0b111]
    lams = left_kernel(rows)
    for lam in lams:
        acc = 0
        for j, r in enumerate(rows):
            if (lam >> j) & 1:
                acc ^= r
        assert acc == 0
    assert len(lams) == len(rows) - rank(BitMatrix(3, tuple(rows)))


def test_words_roundtrip():
    x = (1 << 100) | (1 << 63) | 5
    w = to_words([x], 101)
    assert w.shape == (1, 2)
    assert from_words(w[0]) == x


@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel(m).nrows == m.cols


@given(matrices())
def test_rref_canonical_and_idempotent(m):
    r, piv = reduce_rref(m)
    assert is_rref(r)
    assert piv == sorted(set(piv))
    assert reduce_rref(r)[0] == r
    # double inclusion
    assert all(contains(r, x) for x in m.rows)
    assert span(r.rows, m.cols) == span(m.rows, m.cols)


@given(matrices(max_rows=5, max_cols=10), st.data())
def test_contains_agrees_with_enumeration(m, data):
    r, _ = reduce_rref(m)
    words = span(m.rows, m.cols)
    v = data.draw(st.integers(0, (1 << m.cols) - 1))
    assert contains(r, v) == (v in words)


@given(matrices())
def test_kernel_is_orthogonal(m):
    for v in kernel(m).rows:
        assert m.mul_vec(v) == 0
