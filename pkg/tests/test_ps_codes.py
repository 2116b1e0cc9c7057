import random
from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import all_strings
from polyrec.equivalence import dominant_representative, equivalence_class
from polyrec.oracle import oracle_class_count
from polyrec.ps_codes import (
    ChannelSpecError,
    DecodeFailure,
    MassError,
    build_Cmax,
    channel_mass_reduce,
    channel_missing,
    check_mass_spec,
    classify_mass_error,
    count_E1,
    decode_E1,
    decode_E2,
    decode_E3,
    default_outer_E2,
    default_outer_E3,
    distinct_multisets,
    e2_erasures,
    encode_E2,
    encode_E3,
    enumerate_E1,
    is_dominant,
    membership_E1,
    random_E1,
    random_mass_spec,
    random_missing,
    redundancy_bound_E1,
    redundancy_E1,
)
from polyrec.strings_core import CompositionMultiset, parse_composition, prefix_suffix_multiset
from polyrec.word_families import count_SR

E1_COUNTS = [2, 3, 6, 10, 20, 35, 70, 126, 252, 462, 924, 1716, 3432, 6435, 12870, 24310,
             48620, 92378, 184756, 352716]   # n = 1..20


def ms(text, n):
    return CompositionMultiset(Counter(parse_composition(t) for t in text.split(",")), n, "prefix-suffix")


M_FULL = "1,0*1,0*1^2,0^2*1^2,0^2*1^3,0^3*1^3,0^3*1^3,0,0*1,0^2*1,0^2*1^2,0^3*1^2"
M1 = "1,0*1,0*1^2,0^2*1^2,0^3*1^3,0^3*1^3,0,0*1,0^2*1,0^2*1^2,0^3*1^2"
M2 = "1,0*1,0*1^2,0^2*1^2,0^3*1^2,0^3*1^3,0^3*1^3,0,0*1,0^2*1,0^2*1^2,0^3*1^2"


# maximal code and E1

@pytest.mark.parametrize("n", range(1, 13))
def test_cmax_one_member_per_class(n):
    cm = build_Cmax(n)
    assert len(cm) == oracle_class_count(n)
    assert distinct_multisets(cm)


def test_cmax_sizes():
    assert len(build_Cmax(1)) == 2
    assert len(build_Cmax(6)) == 35
    assert len(build_Cmax(7)) == 70


def test_e1_examples():
    assert membership_E1("101010") and is_dominant("101010")
    assert not membership_E1("010101") and not is_dominant("010101")
    assert decode_E1(prefix_suffix_multiset("101010")) == "101010"
    # 010101 shares the multiset, so the decoder answers with the codeword
    assert decode_E1(prefix_suffix_multiset("010101")) == "101010"


@pytest.mark.parametrize("n", range(1, 21))
def test_e1_count(n):
    assert count_E1(n) == E1_COUNTS[n - 1]


@pytest.mark.parametrize("n", [8, 10, 12])
def test_e1_beats_sr(n):
    assert count_E1(n) > count_SR(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_e1_construction_matches_dominance(n):
    e1 = enumerate_E1(n)
    assert len(e1) == count_E1(n)
    dom = [s for s in all_strings(n) if is_dominant(s)]
    assert list(e1) == dom
    assert all(membership_E1(s) for s in e1)
    assert sum(membership_E1(s) for s in all_strings(n)) == len(e1)
    assert distinct_multisets(e1)
    for s in e1:
        assert decode_E1(prefix_suffix_multiset(s)) == s


@pytest.mark.parametrize("n", range(8, 21))
def test_e1_redundancy(n):
    assert redundancy_E1(n) < redundancy_bound_E1(n)


def test_decode_e1_rejects_garbage():
    with pytest.raises(DecodeFailure):
        decode_E1(ms("1,1,0^2,0^2*1^2,0^3", 3))


@given(st.text(alphabet="01", min_size=1, max_size=50))
def test_dominant_representative_is_a_codeword(s):
    d = dominant_representative(s)
    assert is_dominant(d)
    assert prefix_suffix_multiset(d) == prefix_suffix_multiset(s)


# channels

def test_channel_examples():
    M = prefix_suffix_multiset("101010")
    assert channel_missing(M, []) == M
    assert channel_mass_reduce(M, [], "101010") == M
    m1 = channel_missing(M, [("prefix", 5)], source="101010")
    assert m1 == ms(M1, 6).__class__(ms(M1, 6).counter() - Counter({(6, 3): 1}), 6, "prefix-suffix")
    assert channel_missing(M, [(5, 3)]) == m1
    m2 = channel_mass_reduce(M, [MassError("prefix", 5, 1)], "101010")
    want2 = ms(M2, 6).counter()
    want2[(6, 3)] -= 1
    assert m2.counter() == +want2
    with pytest.raises(ChannelSpecError):
        channel_missing(M, [("prefix", 5)])
    with pytest.raises(ChannelSpecError):
        channel_missing(M, [("prefix", 5), ("prefix", 5)], source="101010")


def test_worked_multisets_accept_doubled_full_composition():
    M = prefix_suffix_multiset("101010")
    assert ms(M_FULL, 6).counter() - M.counter() == Counter({(6, 3): 1})
    assert e2_erasures(ms(M1, 6), conservative=False) == {5, 6}
    assert e2_erasures(ms(M1, 6), conservative=True) == {1, 2, 5, 6}


def test_mass_error_classes():
    assert classify_mass_error("101010", "prefix", 5, 1) == "compatible"
    assert classify_mass_error("101010", "prefix", 5, 2) == "incompatible"
    assert classify_mass_error("101010", "suffix", 3, 1) == "masked"
    assert classify_mass_error("101010", "prefix", 4, 1) == "incompatible"
    assert classify_mass_error("110011", "prefix", 3, 1) == "corrected"
    with pytest.raises(ChannelSpecError):
        check_mass_spec("101010", [MassError("prefix", 3, 1), MassError("prefix", 4, 1)], t=2)
    with pytest.raises(ChannelSpecError):
        check_mass_spec("101010", [MassError("prefix", 3, 3)], t=2)
    with pytest.raises(ChannelSpecError):
        check_mass_spec("1010101010", [MassError("prefix", 5, 1)], t=1, e1=0)


# E2

@pytest.mark.parametrize("t", [1, 2])
@pytest.mark.parametrize("conservative", [True, False])
def test_e2_roundtrip_no_errors(t, conservative):
    rng = random.Random(t)
    for n in (6, 9, 12, 20):
        for _ in range(5):
            s = random_E1(n, rng)
            c = encode_E2(s, t, conservative=conservative)
            assert decode_E2(prefix_suffix_multiset(c), t, conservative=conservative) == s


def test_e2_layout():
    s = "110100"
    c = encode_E2(s, 1)
    R = (len(c) - len(s)) // 2
    assert c[R:R + len(s)] == s and c[:R] == c[-R:][::-1]
    assert is_dominant(c)
    with pytest.raises(ValueError):
        encode_E2("010101", 1)


def _drop_keys(N):
    return sorted({("prefix" if l == N else side, l) for side in ("prefix", "suffix") for l in range(1, N + 1)})


@pytest.mark.parametrize("t,conservative", [(1, True), (1, False), (2, False)])
def test_e2_exhaustive_small(t, conservative):
    for s in ("11010100", "10110010", "11111111"):
        c = encode_E2(s, t, conservative=conservative)
        M = prefix_suffix_multiset(c)
        keys = _drop_keys(len(c))
        for k in range(t + 1):
            for drops in combinations(keys, k):
                got = decode_E2(channel_missing(M, drops, source=c), t, conservative=conservative)
                assert got == s


def test_e2_too_many_missing():
    s = "11010100"
    c = encode_E2(s, 1)
    M = channel_missing(prefix_suffix_multiset(c), [("prefix", 4), ("suffix", 9)], source=c)
    with pytest.raises(DecodeFailure):
        decode_E2(M, 1)


def test_default_outers():
    assert str(default_outer_E2(10, 1)) == "rs:4,7,3"
    assert str(default_outer_E2(10, 1, conservative=False)) == "rs:3,6,4"
    assert str(default_outer_E2(10, 2)) == "rs:4,11,3"
    assert str(default_outer_E2(10, 2, conservative=False)) == "rs:4,7,3"
    assert str(default_outer_E3(40, 1, 1)) == "rs:5,14,8"


# E3

def test_e3_layout_keeps_prefixes_heavy():
    s = "1101001010"
    for t in (1, 2, 3):
        c = encode_E3(s, 1, 1, t)
        N = len(c)
        assert c.startswith("1" * t) and c.endswith("0" * t)
        for j in range(t + 1, N - t + 1):
            assert c[:j].count("1") >= c[N - j:].count("1") + t


@pytest.mark.parametrize("params", [(1, 1, 2), (2, 1, 1), (1, 2, 3)])
def test_e3_random_channel(params):
    e1, e2, t = params
    rng = random.Random(hash(params) & 0xFFFF)
    for _ in range(300):
        s = random_E1(30, rng)
        c = encode_E3(s, e1, e2, t)
        spec = random_mass_spec(c, e1, e2, t, rng)
        check_mass_spec(c, spec, t, e1, e2)
        M = channel_mass_reduce(prefix_suffix_multiset(c), spec, c)
        assert decode_E3(M, e1, e2, t) == s


def test_e3_compatible_example_on_codeword():
    s = "101010"
    c = encode_E3(s, 1, 1, 2)
    N = len(c)
    hits = [l for l in range(3, N - 2) if classify_mass_error(c, "prefix", l, 1, 2) == "compatible"]
    assert hits
    M = channel_mass_reduce(prefix_suffix_multiset(c), [MassError("prefix", hits[0], 1)], c, t=2)
    assert decode_E3(M, 1, 1, 2) == s


@settings(max_examples=50)
@given(st.integers(0, 2 ** 32 - 1))
def test_random_missing_is_decodable(seed):
    rng = random.Random(seed)
    s = random_E1(10, rng)
    c = encode_E2(s, 2)
    drops = random_missing(len(c), 2, rng)
    assert decode_E2(channel_missing(prefix_suffix_multiset(c), drops, source=c), 2) == s
