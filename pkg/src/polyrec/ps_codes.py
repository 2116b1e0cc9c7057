"""
Composition codes over the prefix-suffix multiset.

E1(n) keeps, from every equivalence class, the member whose prefixes are
never lighter than the suffixes of the same length.  Given M(s) the decoder
reads the prefix chain as the heavier composition at every length.

E2 and E3 protect an E1 word s with a systematic Reed-Solomon code whose
parity bits r sit on both sides: c = r* s r (E2) or c = 1^t r* s r 0^t (E3).
Both wrappers keep the prefix chain the heavier one.

Wire format of r: parity symbols in codeword order, each expanded
little-endian into s bits (polynomial basis).  The message s is split the
same way and zero-padded to k symbols.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import log2, pi, prod

from . import kernels
from .equivalence import dominant_representative, equivalence_class
from .reed_solomon import ReedSolomon, RSDecodeError, smallest_spec
from .strings_core import (
    CompositionMultiset,
    normalize_prefix_suffix,
    prefix_suffix_multiset,
    weight_profile,
)
from .word_families import (
    _assemble,
    _sr,
    count_A,
    count_SR,
    enumerate_A,
    enumerate_index_tuples,
    factorize,
    in_SR,
)


class DecodeFailure(Exception):
    pass


class ChannelSpecError(ValueError):
    pass


@dataclass(frozen=True)
class Codebook:
    n: int
    members: tuple
    kind: str
    params: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.members)

    def __contains__(self, s):
        cached = self.__dict__.get("_set")
        if cached is None:
            cached = frozenset(self.members)
            object.__setattr__(self, "_set", cached)
        return s in cached

    def __iter__(self):
        return iter(self.members)


# maximal code

def build_Cmax(n):
    """One representative per class: the lexicographically smallest member."""
    if n < 1:
        raise ValueError("n >= 1")
    members = []
    for x in range(1 << n):
        s = format(x, f"0{n}b")
        if s == min(equivalence_class(s)):
            members.append(s)
    return Codebook(n, tuple(members), "Cmax")


# E1

def is_dominant(s):
    a = weight_profile(s)
    n = len(s)
    w = a[n]
    return all(a[j] >= w - a[n - j] for j in range(1, n + 1))


_A_CACHE = {}


def _a_set(m):
    if m not in _A_CACHE:
        _A_CACHE[m] = frozenset(enumerate_A(m))
    return _A_CACHE[m]


def membership_E1(s):
    """Block test: paired blocks in A(2g) (00 or 11 when g = 1), final block in S_R reversed."""
    if len(s) < 2:
        return True
    fac = factorize(s)
    for u in fac.paired_blocks():
        if len(u) == 2:
            if u not in ("00", "11"):
                return False
        elif u not in _a_set(len(u)):
            return False
    return in_SR(fac.r[-1][::-1])


def enumerate_E1(n):
    members = set()
    for j in enumerate_index_tuples(n, restricted=False):
        gaps = [j[i] - j[i - 1] for i in range(1, len(j))]
        options = [["00", "11"] if g == 1 else enumerate_A(2 * g) for g in gaps[:-1]]
        finals = sorted(x[::-1] for x in _sr(gaps[-1]))
        for combo in product(*options):
            for fin in finals:
                members.add(_assemble(combo, fin))
    return Codebook(n, tuple(sorted(members)), "E1")


def _h_weight(gap, final):
    if final:
        return count_SR(gap)
    if gap == 1:
        return 2
    return count_A(2 * gap)


def count_E1(n):
    total = 0
    for j in enumerate_index_tuples(n, restricted=False):
        gaps = [j[i] - j[i - 1] for i in range(1, len(j))]
        total += prod(_h_weight(g, k == len(gaps) - 1) for k, g in enumerate(gaps))
    return total


def redundancy_E1(n):
    return n - log2(count_E1(n))


def redundancy_bound_E1(n):
    return 0.5 * log2(n) + 3 + 0.5 * log2(pi)


def _levels(M, n):
    """length -> ascending weights."""
    out = {}
    for (l, wt), mult in M.items():
        if not 1 <= l <= n:
            raise DecodeFailure(f"composition length {l} outside 1..{n}")
        out.setdefault(l, []).extend([wt] * mult)
    for v in out.values():
        v.sort()
    return out


def _need(j, n):
    return 1 if j == n else 2


def decode_E1(M, check=True):
    """Heavier composition at each length is the prefix; rebuild and verify the multiset."""
    M = normalize_prefix_suffix(M)
    n = M.n
    lv = _levels(M, n)
    a = [0] * (n + 1)
    for j in range(1, n + 1):
        ws = lv.get(j, [])
        if len(ws) != _need(j, n):
            raise DecodeFailure(f"length {j} has {len(ws)} compositions")
        a[j] = ws[-1]
    for j in range(1, n + 1):
        if a[j] - a[j - 1] not in (0, 1):
            raise DecodeFailure(f"no monotone profile through length {j}")
    s = "".join("1" if a[j] > a[j - 1] else "0" for j in range(1, n + 1))
    if check and prefix_suffix_multiset(s) != M:
        raise DecodeFailure("rebuilt string does not reproduce the multiset")
    return s


def random_E1(n, rng):
    return dominant_representative("".join(rng.choice("01") for _ in range(n)))


def distinct_multisets(codebook):
    """True when no two members share a prefix-suffix multiset."""
    mat = kernels.ps_signature_matrix(codebook.n)
    seen = set()
    for s in codebook:
        key = mat[int(s, 2)].tobytes()
        if key in seen:
            return False
        seen.add(key)
    return True


# bit <-> symbol packing

def bits_to_symbols(bits, s, count):
    syms = []
    for k in range(count):
        chunk = bits[k * s:(k + 1) * s]
        syms.append(sum(int(b) << i for i, b in enumerate(chunk)))
    return syms


def symbols_to_bits(syms, s):
    return "".join("".join(str((v >> i) & 1) for i in range(s)) for v in syms)


def default_outer_E2(n, t, conservative=True):
    return smallest_spec(n, (4 if conservative else 2) * t + 1)


def default_outer_E3(n, e1, e2):
    return smallest_spec(n, 4 * e1 + 2 * e2 + 1)


@lru_cache(maxsize=64)
def _rs(outer):
    return ReedSolomon(outer)


def parity_length(outer):
    return outer.s * outer.redundancy


def parity_bits(s_bits, outer):
    if -(-len(s_bits) // outer.s) > outer.k:
        raise ValueError(f"{len(s_bits)} bits do not fit {outer.k} symbols of {outer.s} bits")
    cw = _rs(outer).encode(bits_to_symbols(s_bits, outer.s, outer.k))
    return symbols_to_bits(cw[outer.k:], outer.s)


def encode_E2(s, t, outer=None, conservative=True, check=True):
    outer = outer or default_outer_E2(len(s), t, conservative)
    if check and not is_dominant(s):
        raise ValueError("message is not an E1 codeword")
    r = parity_bits(s, outer)
    return r[::-1] + s + r


def encode_E3(s, e1, e2, t, outer=None, check=True):
    outer = outer or default_outer_E3(len(s), e1, e2)
    if check and not is_dominant(s):
        raise ValueError("message is not an E1 codeword")
    r = parity_bits(s, outer)
    return "1" * t + r[::-1] + s + r + "0" * t


def _bits_from_profile(a):
    """a may hold None; returns a list over positions 1..N of '0', '1' or None."""
    out = []
    for i in range(1, len(a)):
        if a[i] is None or a[i - 1] is None:
            out.append(None)
        else:
            d = a[i] - a[i - 1]
            if d not in (0, 1):
                raise DecodeFailure(f"inconsistent prefix weights at length {i}")
            out.append("1" if d else "0")
    return out


def _outer_decode(bits, lead, n, outer):
    """
    bits covers the whole codeword (None = erased) and lead counts the pad
    bits in front of r*.  The two parity copies are merged: an erased copy
    defers to the other one, disagreeing copies become an erasure.
    """
    R = parity_length(outer)
    rstar = bits[lead:lead + R]
    sbits = bits[lead + R:lead + R + n]
    rbits = bits[lead + R + n:lead + 2 * R + n]
    r = []
    for k in range(R):
        x, y = rbits[k], rstar[R - 1 - k]
        if x is None:
            r.append(y)
        elif y is None or x == y:
            r.append(x)
        else:
            r.append(None)
    sym_bits = list(sbits) + ["0"] * (outer.k * outer.s - n) + r
    word, erased = [], []
    for p in range(outer.m):
        chunk = sym_bits[p * outer.s:(p + 1) * outer.s]
        if None in chunk:
            erased.append(p)
            word.append(0)
        else:
            word.append(sum(int(b) << i for i, b in enumerate(chunk)))
    try:
        cw = _rs(outer).decode(word, erased)
    except RSDecodeError as exc:
        raise DecodeFailure(f"outer decoder: {exc}") from exc
    out = symbols_to_bits(cw[:outer.k], outer.s)
    if "1" in out[n:]:
        raise DecodeFailure("padding bits decoded to ones")
    return out[:n]


def _message_length(N, pad, outer, default_outer):
    """Recover n from the codeword length, given or searching the default outer code."""
    if outer is not None:
        n = N - 2 * parity_length(outer) - 2 * pad
        if n < 1:
            raise DecodeFailure(f"codeword length {N} too short for {outer}")
        return n, outer
    for n in range(1, N + 1):
        o = default_outer(n)
        if n + 2 * parity_length(o) + 2 * pad == N:
            return n, o
    raise DecodeFailure(f"no message length matches codeword length {N}")


def _as_ps(M):
    return normalize_prefix_suffix(M) if M.kind == "prefix-suffix" else M


def e2_erasures(M, conservative=True):
    """
    Bit positions (1-based) erased by the E2 reader.  A length j missing any
    composition leaves a_j unknown and erases bits j and j+1; the
    conservative reader also erases the mirrored bits N-j and N-j+1.
    """
    M = _as_ps(M)
    N = M.n
    lv = _levels(M, N)
    out = set()
    for j in range(1, N + 1):
        have = len(lv.get(j, []))
        if have > _need(j, N):
            raise DecodeFailure(f"length {j} has {have} compositions")
        if have < _need(j, N):
            cand = [j, j + 1] + ([N - j, N - j + 1] if conservative else [])
            out.update(p for p in cand if 1 <= p <= N)
    return out


def decode_E2(M, t, outer=None, conservative=True):
    """Missing-composition decoder; raises DecodeFailure beyond t missing compositions."""
    M = _as_ps(M)
    N = M.n
    n, outer = _message_length(N, 0, outer, lambda k: default_outer_E2(k, t, conservative))
    lv = _levels(M, N)
    missing = sum(max(0, _need(j, N) - len(lv.get(j, []))) for j in range(1, N + 1))
    if missing > t:
        raise DecodeFailure(f"{missing} missing compositions exceed t={t}")
    erased = e2_erasures(M, conservative)
    a = [0] + [lv[j][-1] if len(lv.get(j, [])) == _need(j, N) else None for j in range(1, N + 1)]
    bits = _bits_from_profile(a)
    for p in erased:
        bits[p - 1] = None
    s = _outer_decode(bits, 0, n, outer)
    if M.counter() - prefix_suffix_multiset(encode_E2(s, t, outer, check=False)).counter():
        raise DecodeFailure("decoded word does not explain the received multiset")
    return s


def decode_E3(M, e1, e2, t, outer=None):
    """
    Mass-reducing substitution decoder.  The heavier composition at each
    length t+1..N-t is the prefix weight, possibly lowered; a lowered value
    that breaks monotonicity against its (correct) neighbours is repaired
    when the neighbours pin it down, and erased with the next bit otherwise.
    """
    M = _as_ps(M)
    N = M.n
    n, outer = _message_length(N, t, outer, lambda k: default_outer_E3(k, e1, e2))
    lv = _levels(M, N)
    b = [0] * (N + 1)
    for j in range(1, N + 1):
        have = lv.get(j, [])
        if len(have) != _need(j, N):
            raise DecodeFailure(f"length {j} has {len(have)} compositions")
        b[j] = have[-1]
    w = max(b[N - t], b[N - t + 1]) if t else b[N]
    ref = list(b)
    for j in range(t + 1):
        ref[j] = j
    for j in range(N - t, N + 1):
        ref[j] = w
    # a lowered neighbour only makes a correct value look more consistent,
    # so flagged lengths are exactly the detected errors and their
    # neighbours are correct
    flagged = [i for i in range(t + 1, N - t) if ref[i] < ref[i - 1] or ref[i + 1] > ref[i] + 1]
    a = list(ref)
    for i in flagged:
        b1, b3 = ref[i - 1], ref[i + 1]
        if b3 == b1:
            a[i] = b1
        elif b3 == b1 + 2:
            a[i] = b1 + 1
        elif b3 == b1 + 1:
            a[i] = None
        else:
            raise DecodeFailure(f"neighbours of length {i} differ by {b3 - b1}")
    return _outer_decode(_bits_from_profile(a), t, n, outer)


# channels

def _side_weight(s, side, length):
    if side == "prefix" or length == len(s):
        return s[:length].count("1")
    return s[len(s) - length:].count("1")


def _side_key(side, length, n):
    if side not in ("prefix", "suffix"):
        raise ChannelSpecError(f"bad side {side!r}")
    if not 1 <= length <= n:
        raise ChannelSpecError(f"length {length} outside 1..{n}")
    return ("prefix" if length == n else side, length)


def channel_missing(M, drops, source=None):
    """
    Remove compositions from M.  A drop is either a composition (length,
    weight) or a (side, length) pair; the latter needs the source string to
    know which composition sits on that side.  No drops is the identity.
    """
    n = M.n
    c = M.counter()
    seen = set()
    for d in drops:
        if isinstance(d[0], str):
            key = _side_key(d[0], d[1], n)
            if key in seen:
                raise ChannelSpecError(f"{key} dropped twice")
            seen.add(key)
            if source is None:
                raise ChannelSpecError("side-based drops need the source string")
            comp = (d[1], _side_weight(source, *key))
        else:
            comp = (int(d[0]), int(d[1]))
        if c[comp] <= 0:
            raise ChannelSpecError(f"composition {comp} not present")
        c[comp] -= 1
    return CompositionMultiset(+c, n, M.kind)


@dataclass(frozen=True)
class MassError:
    side: str
    length: int
    drop: int


def classify_mass_error(c, side, length, drop, t=0):
    """
    How the E3 reader sees one weight drop on the word c:

    masked        suffix chain, or a length whose prefix weight is known anyway;
    corrected     neighbours differ by 0 or 2, so the value is forced;
    compatible    b2 = b3 = b1 + 1 and drop 1: reads as 10 -> 01;
    incompatible  other drops with b3 = b1 + 1: detected, two erasures.
    """
    N = len(c)
    side, length = _side_key(side, length, N)
    if side == "suffix" or length <= t or length >= N - t:
        return "masked"
    a = weight_profile(c)
    b1, b2, b3 = a[length - 1], a[length], a[length + 1]
    if b3 != b1 + 1:
        return "corrected"
    if b2 == b1 + 1 and drop == 1:
        return "compatible"
    return "incompatible"


def check_mass_spec(c, spec, t, e1=None, e2=None):
    """Validate a mass-reducing pattern; returns the Counter of error classes."""
    N = len(c)
    used = {"prefix": set(), "suffix": set()}
    counts = Counter()
    for e in spec:
        side, length = _side_key(e.side, e.length, N)
        if not 1 <= e.drop <= t:
            raise ChannelSpecError(f"drop {e.drop} outside 1..{t}")
        lens = used[side]
        if {length - 1, length, length + 1} & lens:
            raise ChannelSpecError(f"adjacent or repeated error on the {side} chain at {length}")
        lens.add(length)
        if _side_weight(c, side, length) < e.drop:
            raise ChannelSpecError("weight would become negative")
        counts[classify_mass_error(c, side, length, e.drop, t)] += 1
    if e1 is not None and counts["compatible"] > e1:
        raise ChannelSpecError(f"{counts['compatible']} compatible errors exceed e1={e1}")
    if e2 is not None and counts["incompatible"] > e2:
        raise ChannelSpecError(f"{counts['incompatible']} incompatible errors exceed e2={e2}")
    return counts


def channel_mass_reduce(M, spec, source, t=None):
    """Lower the weight of the named prefix/suffix compositions of ``source``."""
    n = M.n
    if t is not None:
        check_mass_spec(source, spec, t)
    c = M.counter()
    for e in spec:
        side, length = _side_key(e.side, e.length, n)
        wt = _side_weight(source, side, length)
        if c[(length, wt)] <= 0:
            raise ChannelSpecError(f"composition {(length, wt)} not present")
        c[(length, wt)] -= 1
        c[(length, wt - e.drop)] += 1
    return CompositionMultiset(+c, n, M.kind)


def random_missing(n, t, rng):
    """Up to t distinct (side, length) drops for a length-n word."""
    keys = sorted({_side_key(side, l, n) for side in ("prefix", "suffix") for l in range(1, n + 1)})
    return rng.sample(keys, rng.randint(0, t))


def random_mass_spec(c, e1, e2, t, rng, extra=3, attempts=400):
    """
    Seeded random pattern on c: up to e1 compatible and e2 incompatible
    errors plus up to ``extra`` corrected or masked ones, on non-adjacent
    lengths of each chain.
    """
    N = len(c)
    want = {"compatible": rng.randint(0, e1), "incompatible": rng.randint(0, e2),
            "other": rng.randint(0, extra)}
    spec, got = [], Counter()
    for _ in range(attempts):
        cand = MassError(rng.choice(("prefix", "suffix")), rng.randint(1, N), rng.randint(1, t))
        kind = classify_mass_error(c, cand.side, cand.length, cand.drop, t)
        bucket = kind if kind in ("compatible", "incompatible") else "other"
        if got[bucket] >= want[bucket]:
            continue
        try:
            check_mass_spec(c, spec + [cand], t, e1, e2)
        except ChannelSpecError:
            continue
        spec.append(cand)
        got[bucket] += 1
        if all(got[k] >= v for k, v in want.items()):
            break
    return spec
