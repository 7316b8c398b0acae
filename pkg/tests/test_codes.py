import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sdc import codes
from sdc.codes import (
    LinearCode,
    code_from_ints,
    construct,
    direct_sum,
    dual,
    extremal_bound,
    from_generators,
    is_doubly_even,
    is_extremal,
    is_self_dual,
    macwilliams,
    min_distance,
    min_distance_bruteforce,
    shadow,
    weight_enumerator,
)
from sdc.gf2la import BitVector

from .helpers import random_code
from .oracles import dot, span, str_to_int, weights


@pytest.fixture(scope="module")
def golay():
    return construct("golay_24")


@pytest.fixture(scope="module")
def golay_words(golay):
    return span(golay.rows, 24)


def test_from_generators_examples():
    rep = from_generators([BitVector.from_str("11")])
    assert (rep.n, rep.k) == (2, 1)
    c = from_generators([BitVector.from_str(s) for s in ["1100", "0011", "1111"]])
    assert (c.n, c.k) == (4, 2)
    with pytest.raises(ValueError):
        from_generators([BitVector.from_str("11"), BitVector.from_str("111")])


def test_golay_construction_rank(golay):
    assert (golay.n, golay.k) == (24, 12)


def test_code_equality_is_set_equality():
    a = LinearCode.from_strs(["1100", "0011"])
    b = LinearCode.from_strs(["1111", "0011"])
    assert a == b
    assert a != LinearCode.from_strs(["1000", "0100"])


def test_dual_examples():
    assert dual(construct("repetition_2")) == construct("repetition_2")
    h = construct("extended_hamming_8")
    assert dual(h) == h
    d4 = dual(construct("repetition_4"))
    assert d4.k == 3
    assert span(d4.rows, 4) == {v for v in range(16) if bin(v).count("1") % 2 == 0}


def test_dual_matches_enumeration():
    rng = random.Random(2)
    for _ in range(20):
        c = random_code(rng, 7, rng.randint(1, 5))
        assert span(dual(c).rows, 7) == {
            v for v in range(1 << 7) if all(dot(v, w) == 0 for w in c.rows)
        }


def test_self_duality_examples(golay):
    assert is_self_dual(golay)
    assert is_self_dual(LinearCode.from_strs(["1100", "0011"]))
    assert not is_self_dual(LinearCode.from_strs(["1000", "0100"]))


def test_doubly_even_examples(golay, golay_words):
    assert is_doubly_even(golay)
    assert all(w % 4 == 0 for w in weights(golay_words))
    assert not is_doubly_even(construct("repetition_2"))
    h = construct("extended_hamming_8")
    assert is_doubly_even(h)
    assert all(w % 4 == 0 for w in weights(span(h.rows, 8)))


@given(st.integers(0, 2**32))
@settings(max_examples=40)
def test_doubly_even_matches_enumeration(seed):
    rng = random.Random(seed)
    c = random_code(rng, rng.randint(4, 14), rng.randint(1, 6))
    assert is_doubly_even(c) == all(w % 4 == 0 for w in weights(span(c.rows, c.n)))


def test_min_distance_examples(golay, golay_words):
    assert min_distance_bruteforce(construct("repetition_2")) == 2
    assert min_distance_bruteforce(golay) == 8 == min(w for w in weights(golay_words) if w)
    assert min_distance_bruteforce(construct("extended_hamming_8")) == 4
    assert min_distance(golay) == 8
    for n in (1, 5, 17):
        assert min_distance(construct(f"repetition_{n}")) == n


def test_min_distance_guard(monkeypatch):
    monkeypatch.setattr(codes, "MAX_ENUM_DIM", 3)
    with pytest.raises(codes.EnumerationTooLarge):
        min_distance_bruteforce(construct("extended_hamming_8"))


def test_min_distance_qr_codes():
    # QR48 is the extremal [48,24,12] code; QR72 reaches only 12 < 16
    q48 = construct("eqr_47")
    assert is_self_dual(q48) and min_distance(q48) == 12 == extremal_bound(48)
    q72 = construct("eqr_71")
    assert is_self_dual(q72) and min_distance(q72) == 12
    assert not is_extremal(q72)


@given(st.integers(0, 2**32))
@settings(max_examples=60)
def test_min_distance_matches_bruteforce(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 30)
    c = random_code(rng, n, rng.randint(1, min(n, 12)))
    assert min_distance(c) == min_distance_bruteforce(c)


def _random_self_orthogonal(rng, n, k):
    rows = []
    for _ in range(200):
        v = rng.getrandbits(n)
        if v.bit_count() % 2 == 0 and all(dot(v, r) == 0 for r in rows):
            rows.append(v)
            if len(rows) == k:
                break
    return code_from_ints(n, rows)


@given(st.integers(0, 2**32))
@settings(max_examples=40)
def test_min_distance_on_self_orthogonal(seed):
    rng = random.Random(seed)
    n = rng.randint(8, 28)
    c = _random_self_orthogonal(rng, n, rng.randint(1, min(n // 2, 12)))
    assert min_distance(c) == min_distance_bruteforce(c)


def test_weight_enumerator_examples(golay):
    assert weight_enumerator(construct("repetition_2")).coefficients == (1, 0, 1)
    assert weight_enumerator(golay)[8] == 759
    assert weight_enumerator(LinearCode.from_strs(["1100", "0011"])).coefficients == (1, 0, 2, 0, 1)


def test_weight_enumerator_large_dimension_blocks():
    # k = 20 exercises the Gray-walked high generators
    rng = random.Random(9)
    c = random_code(rng, 40, 20)
    we = weight_enumerator(c)
    assert we.total() == 2 ** c.k and we[0] == 1
    sample = span(c.rows[:10], 40)
    assert min(w for w in weights(sample) if w) >= we.min_distance()


@pytest.mark.parametrize("name", ["golay_24", "extended_hamming_8", "c4", "i2_5", "eqr_47"])
def test_macwilliams_fixed_point_for_self_dual(name):
    we = weight_enumerator(construct(name))
    assert macwilliams(we) == we


def test_macwilliams_gives_dual_enumerator():
    c = construct("repetition_5")
    assert macwilliams(weight_enumerator(c)) == weight_enumerator(dual(c))


def test_shadow_repetition():
    sh = shadow(construct("repetition_2"))
    assert str(sh.representative) == "10"
    assert {f"{x & 1}{x >> 1}" for x in sh.elements()} == {"10", "01"}


def test_shadow_c4_matches_affine_enumeration():
    c = construct("c4")
    words = span(c.rows, 4)
    brute = {x for x in range(16) if all(dot(x, w) == (bin(w).count("1") // 2) % 2 for w in words)}
    assert brute == {str_to_int(s) for s in ["1100", "0011", "0110", "1001"]}
    assert set(shadow(c).elements()) == brute


def test_shadow_doubly_even_is_code(golay):
    sh = shadow(golay)
    assert sh.representative.bits == 0
    assert sh.subcode == golay


def test_shadow_requires_self_dual():
    with pytest.raises(ValueError):
        shadow(construct("repetition_3"))


@pytest.mark.parametrize("name", ["i2_3", "c4", "extended_hamming_8+i2_2", "golay_24+repetition_2"])
def test_shadow_of_singly_even_is_disjoint(name):
    c = construct(name)
    sh = shadow(c)
    assert not is_doubly_even(c)
    assert sh.representative.bits not in c


def test_extremal_bound():
    assert [extremal_bound(n) for n in (24, 48, 72, 22)] == [8, 12, 16, 6]
    assert extremal_bound(2) == 4
    with pytest.raises(ValueError):
        extremal_bound(7)


def test_is_extremal(golay):
    assert is_extremal(golay)
    assert not is_extremal(construct("repetition_2"))
    assert is_extremal(construct("extended_hamming_8"))
    with pytest.raises(ValueError):
        is_extremal(construct("repetition_3"))


def test_fixtures():
    c4 = construct("c4")
    assert is_self_dual(c4) and min_distance(c4) == 2
    assert span(c4.rows, 4) == {0, 0b0101, 0b1010, 0b1111}
    s = construct("i2_9")
    assert (s.n, s.k) == (18, 9) and is_self_dual(s) and min_distance(s) == 2
    assert direct_sum(construct("repetition_2"), construct("c4")).n == 6
    with pytest.raises(KeyError):
        construct("nonsense")


def test_dual_involution_random():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 20)
        c = random_code(rng, n, rng.randint(0, n))
        assert dual(dual(c)) == c
        if is_self_dual(c):
            assert 2 * c.k == c.n
