import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from conftest import all_strings
from polyrec.full_codes import (
    ChannelContractError,
    FullDecodeFailure,
    backtrack_decode,
    build_CAt,
    channel_delete,
    count_CAt,
    count_integer_solutions,
    count_SRt,
    count_St,
    enumerate_SRt,
    enumerate_St,
    fibonacci,
    full_roundtrip_ok,
    has_wide_gap,
    in_CAt,
    in_SRt,
    in_St,
    lucas_sum,
    shared_pair_gaps_hold,
    sigma_direct,
    sigma_from_w,
    srt_lower_bound,
    weight_sums,
)
from polyrec.oracle import oracle_sigma
from polyrec.strings_core import full_multiset


def test_sigma_examples():
    assert weight_sums("0011") == (2, 3, 3, 2)
    assert sigma_from_w(weight_sums("0011"), 4) == (1, 1) == sigma_direct("0011")
    assert weight_sums("000000") == (0,) * 6
    assert sigma_from_w((0,) * 6, 6) == (0, 0, 0)
    with pytest.raises(ValueError):
        sigma_direct("010")


@pytest.mark.parametrize("n", range(2, 15, 2))
def test_sigma_recovery_against_oracle(n):
    direct = oracle_sigma(n)
    for x, s in enumerate(all_strings(n)):
        w = weight_sums(s)
        assert w == w[::-1]
        assert sigma_from_w(w, n) == tuple(direct[x])


@given(st.integers(1, 40).flatmap(lambda h: st.text(alphabet="01", min_size=2 * h, max_size=2 * h)))
def test_sigma_recovery_long(s):
    assert sigma_from_w(weight_sums(s), len(s)) == sigma_direct(s)


@pytest.mark.parametrize("n", range(6, 21, 2))
def test_family_counts(n):
    for t in range(2, n // 2):
        srt = enumerate_SRt(n, t) if n <= 16 else None
        st_ = enumerate_St(n, t)
        assert len(st_) == count_St(n, t)
        assert len(set(st_)) == len(st_)
        assert all(in_St(s, t) for s in st_[:500])
        assert count_SRt(n, t) >= srt_lower_bound(n, t)
        if srt is not None:
            assert len(srt) == count_SRt(n, t)
            assert all(s.startswith("0" * t) and s.endswith("1" * t) for s in srt)
            assert not set(srt) & set(st_)
            assert all(in_SRt(s, t) for s in srt)


def test_cat_sizes():
    assert (count_SRt(12, 2), count_St(12, 2), count_CAt(12, 2)) == (91, 144, 235)
    assert len(build_CAt(12, 2)) == 235
    assert count_CAt(16, 2) == 2422


@pytest.mark.parametrize("n", [8, 10, 12])
def test_membership_matches_filter(n):
    for t in range(2, n // 2):
        cat = set(build_CAt(n, t))
        assert {s for s in all_strings(n) if in_CAt(s, t)} == cat


def test_t_range():
    with pytest.raises(ValueError):
        enumerate_St(12, 6)
    with pytest.raises(ValueError):
        count_SRt(11, 2)


def test_counting_lemmas():
    assert lucas_sum(0) == 1 == fibonacci(1)
    assert lucas_sum(1) == 1 == fibonacci(2)
    assert lucas_sum(10) == 89 == fibonacci(11)
    assert all(lucas_sum(m) == fibonacci(m + 1) for m in range(31))
    assert count_integer_solutions(5, (0, 1, 1)) == 10
    brute = sum(1 for a in range(6) for b in range(1, 6) for c in range(1, 6) if a + b + c == 5)
    assert brute == 10
    assert count_integer_solutions(1, (1, 1)) == 0


def test_separation_lemmas_n12():
    t = 2
    srt = enumerate_SRt(12, t)
    st_ = enumerate_St(12, t)
    for fam, check in ((srt, lambda s, v: shared_pair_gaps_hold(s, v, t)), (st_, has_wide_gap)):
        pairs = 0
        for s, v in combinations(fam, 2):
            if sigma_direct(s) == sigma_direct(v):
                pairs += 1
                assert check(s, v)
        assert pairs > 0


def test_channel_examples():
    s = enumerate_SRt(12, 2)[7]
    C = full_multiset(s)
    assert channel_delete(C, 0, 2, seed=1) == C
    out = channel_delete(C, 1, 2, spec={3: [C.by_length()[3][0], C.by_length()[3][-1]]})
    assert sum(m for (l, _), m in out.items() if l == 3) == 8
    ws4, ws9 = C.by_length()[4], C.by_length()[9]
    with pytest.raises(ChannelContractError):
        channel_delete(C, 2, 2, spec={4: ws4[:1], 9: ws9[:1]})
    with pytest.raises(ChannelContractError):
        channel_delete(C, 1, 2, spec={4: ws4[:3]})
    rng = random.Random(3)
    for _ in range(50):
        out = channel_delete(C, 2, 2, seed=rng)
        hit = [l for l in range(1, 13) if sum(m for (k, _), m in out.items() if k == l) < 13 - l]
        assert len(hit) <= 2 and not any(12 - l + 1 in hit for l in hit if 12 - l + 1 != l)


@pytest.mark.parametrize("n", [10, 12, 14])
def test_error_free_roundtrip(n):
    for s in build_CAt(n, 2):
        assert full_roundtrip_ok(s, 2)


@pytest.mark.parametrize("n", [12, 16])
def test_deletion_channel_roundtrip(n):
    rng = random.Random(n)
    code = build_CAt(n, 2).members
    for _ in range(150):
        s = rng.choice(code)
        C = channel_delete(full_multiset(s), 2, 2, seed=rng, exact=rng.random() < 0.7)
        assert backtrack_decode(C, n, 2) == s


def test_non_codewords_are_declined():
    for s in ("101010", "010101", "011001", "100110"):
        with pytest.raises(FullDecodeFailure):
            backtrack_decode(full_multiset(s), 6, 2)
    with pytest.raises(ValueError):
        backtrack_decode(full_multiset("0101"), 4, 2)
