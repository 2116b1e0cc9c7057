import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from polyrec.reed_solomon import GF2m, OuterCodeSpec, ReedSolomon, RSDecodeError, smallest_spec


@pytest.mark.parametrize("s", range(2, 13))
def test_field_axioms(s):
    gf = GF2m(s)
    rng = random.Random(s)
    for _ in range(200):
        a, b, c = (rng.randrange(1, gf.size) for _ in range(3))
        assert gf.mul(a, gf.inv(a)) == 1
        assert gf.mul(a, b ^ c) == gf.mul(a, b) ^ gf.mul(a, c)
        assert gf.div(gf.mul(a, b), b) == a
    # alpha generates the whole multiplicative group
    assert len({gf.pow_alpha(i) for i in range(gf.order)}) == gf.order


def test_spec_parse_and_limits():
    o = OuterCodeSpec.parse("rs:4,7,3")
    assert (o.s, o.m, o.k, o.d, o.redundancy) == (4, 7, 3, 5, 4)
    assert str(o) == "rs:4,7,3"
    with pytest.raises(ValueError):
        OuterCodeSpec(3, 8, 2)
    with pytest.raises(ValueError):
        OuterCodeSpec.parse("bch:4,7,3")
    assert smallest_spec(10, 5) == OuterCodeSpec(4, 7, 3)


def test_minimum_distance_by_enumeration():
    # every pair of the 512 codewords differs in at least d positions
    rs = ReedSolomon(OuterCodeSpec(3, 7, 3))
    words = [rs.encode(list(m)) for m in product(range(8), repeat=3)]
    zero = [0] * 7
    assert min(sum(x != y for x, y in zip(w, zero)) for w in words if any(w)) == 5
    assert all(not any(rs.syndromes(w)) for w in words)


@given(st.integers(0, 2 ** 32 - 1), st.sampled_from(["rs:4,15,7", "rs:5,14,8", "rs:8,40,20", "rs:3,7,1"]))
def test_correct_within_budget(seed, text):
    rng = random.Random(seed)
    spec = OuterCodeSpec.parse(text)
    rs = ReedSolomon(spec)
    msg = [rng.randrange(1 << spec.s) for _ in range(spec.k)]
    cw = rs.encode(msg)
    assert cw[:spec.k] == msg
    budget = spec.d - 1
    n_err = rng.randint(0, budget // 2)
    n_era = rng.randint(0, budget - 2 * n_err)
    pos = rng.sample(range(spec.m), n_err + n_era)
    word = list(cw)
    for p in pos:
        word[p] ^= rng.randrange(1, 1 << spec.s)
    assert rs.decode(word, pos[n_err:]) == cw


def test_too_many_erasures():
    rs = ReedSolomon(OuterCodeSpec(4, 7, 3))
    with pytest.raises(RSDecodeError):
        rs.decode([0] * 7, erasures=range(5))


def test_beyond_budget_never_returns_a_non_codeword():
    rng = random.Random(7)
    spec = OuterCodeSpec(4, 15, 7)
    rs = ReedSolomon(spec)
    for _ in range(300):
        cw = rs.encode([rng.randrange(16) for _ in range(7)])
        word = list(cw)
        for p in rng.sample(range(15), 6):
            word[p] ^= rng.randrange(1, 16)
        try:
            out = rs.decode(word)
        except RSDecodeError:
            continue
        assert not any(rs.syndromes(out))
