"""
Codes over the full composition multiset C(s) = C_1(s) + ... + C_n(s).

Lengths are even throughout.  w_l is the total weight of all length-l
windows and sigma_i = s_i + s_{n-i+1} the weight of the i-th mirrored pair.
Since w_l - w_{l-1} = wt(s_l .. s_{n-l+1}) for l <= n/2, sigma follows from
w_1..w_{n/2} by second differences.

C_A^(t) = S^(t) + S_R^(t)(n) corrects a (t, 2)-deletion error: up to t
lengths each lose up to two compositions, never both l and n-l+1.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import accumulate, combinations, product
from math import comb, floor, pi, sqrt

from .strings_core import CompositionMultiset, full_multiset
from .word_families import count_catalan_bertrand, in_SR, is_catalan_bertrand


class ChannelContractError(ValueError):
    """The received multiset cannot come from the (t, 2) asymmetric deletion channel."""


class FullDecodeFailure(Exception):
    pass


def _check_even(n):
    if n % 2:
        raise ValueError(f"n must be even, got {n}")


def _check_t(n, t):
    _check_even(n)
    if not 2 <= t < n // 2:
        raise ValueError(f"need 2 <= t < n/2, got t={t}, n={n}")


# weight sums and pair weights

def weight_sums(s):
    """(w_1, ..., w_n)."""
    n = len(s)
    P = list(accumulate((ch == "1" for ch in s), initial=0))
    return tuple(sum(P[p + l] - P[p] for p in range(n - l + 1)) for l in range(1, n + 1))


def sigma_from_w(w, n):
    _check_even(n)
    if len(w) < n // 2:
        raise ValueError("need w_1 .. w_{n/2}")
    h = n // 2
    W = (0,) + tuple(w[:h])
    sig = [2 * W[l] - W[l - 1] - W[l + 1] for l in range(1, h)]
    sig.append(W[h] - W[h - 1])
    return tuple(sig)


def sigma_direct(s):
    n = len(s)
    _check_even(n)
    return tuple(int(s[i]) + int(s[n - 1 - i]) for i in range(n // 2))


# S_R^(t)(n)

def in_SRt(s, t):
    n = len(s)
    if n % 2 or t >= n // 2 or t < 1:
        return False
    if s[:t] != "0" * t or s[n - t:] != "1" * t:
        return False
    diff = "".join(s[i - 1] for i in range(t + 1, n // 2 + 1) if s[i - 1] != s[n - i])
    return is_catalan_bertrand(diff)


def _pairs_to_string(n, pairs):
    """pairs[i-1] = (s_i, s_{n-i+1})."""
    left = "".join(p[0] for p in pairs)
    right = "".join(p[1] for p in reversed(pairs))
    return left + right


def enumerate_SRt(n, t):
    _check_t(n, t)
    h = n // 2
    out = []

    def grow(pairs, bal):
        if len(pairs) == h:
            out.append(_pairs_to_string(n, pairs))
            return
        for p in ("00", "11"):
            grow(pairs + [p], bal)
        grow(pairs + ["01"], bal + 1)
        if bal > 1:
            grow(pairs + ["10"], bal - 1)

    grow(["01"] * t, 0)
    return sorted(out)


def count_SRt(n, t):
    _check_t(n, t)
    h = n // 2 - t
    return sum(comb(h, i) * 2 ** (h - i) * count_catalan_bertrand(i) for i in range(h + 1))


def srt_lower_bound(n, t):
    return 2 ** (n - 2 * t - 1) / sqrt(pi * ((n - 2 * t) // 4 + 1))


# S^(t)

def valid_St_index_set(I, n, t):
    I = sorted(I)
    h = n // 2
    l = len(I)
    if l == 0:
        return True
    if I[0] < t + 1 or I[-1] > h:
        return False
    if l == 1:
        return True
    if I[-1] >= h:
        return False
    return all(I[k + 1] - I[k] >= 2 for k in range(1, l - 1))


def st_index_set(s):
    """Positions 2..n/2 whose pair holds a single one."""
    n = len(s)
    return tuple(i for i in range(2, n // 2 + 1) if s[i - 1] != s[n - i])


def in_St(s, t):
    n = len(s)
    if n % 2 or not in_SR(s) or len(s) < 2:
        return False
    return valid_St_index_set(st_index_set(s), n, t)


def enumerate_St(n, t):
    _check_t(n, t)
    h = n // 2
    positions = range(2, h + 1)
    out = []
    for l in range(0, h):
        for I in combinations(positions, l):
            if not valid_St_index_set(I, n, t):
                continue
            rest = [i for i in positions if i not in I]
            cbs = [b for b in product("01", repeat=l) if is_catalan_bertrand("0" + "".join(b))]
            for bits in cbs:
                for fill in product(("00", "11"), repeat=len(rest)):
                    pairs = {1: "01"}
                    pairs.update({i: b + ("1" if b == "0" else "0") for i, b in zip(I, bits)})
                    pairs.update(zip(rest, fill))
                    out.append(_pairs_to_string(n, [pairs[i] for i in range(1, h + 1)]))
    return sorted(out)


def count_St(n, t):
    _check_t(n, t)
    h = n // 2
    return sum(
        2 ** (h - l - 1) * comb(h - t + 1 - l, l) * count_catalan_bertrand(l + 1)
        for l in range(0, h - t + 2)
        if h - t + 1 - l >= l
    )


def in_CAt(s, t):
    return in_SRt(s, t) or in_St(s, t)


def build_CAt(n, t):
    from .ps_codes import Codebook
    members = tuple(sorted(set(enumerate_St(n, t)) | set(enumerate_SRt(n, t))))
    return Codebook(n, members, "CAt", {"t": t})


def count_CAt(n, t):
    return count_St(n, t) + count_SRt(n, t)


# counting lemmas

def count_integer_solutions(N, lower_bounds):
    """Solutions of y_1 + ... + y_k = N with y_i >= p_i."""
    k = len(lower_bounds)
    if k == 0:
        return int(N == 0)
    top = N + k - sum(lower_bounds) - 1
    if top < k - 1:
        return 0
    return comb(top, k - 1)


def lucas_sum(m):
    return sum(comb(m - k, k) for k in range(m // 2 + 1))


def fibonacci(m):
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    return a


# window multisets as length -> Counter of weights

def window_weights(s, l):
    P = list(accumulate((ch == "1" for ch in s), initial=0))
    return Counter(P[p + l] - P[p] for p in range(len(s) - l + 1))


def multiset_difference_size(s, v, l):
    return sum((window_weights(s, l) - window_weights(v, l)).values())


def longest_shared_pair(s, v):
    n = len(s)
    i = 0
    while i < n // 2 and s[i] == v[i] and s[n - 1 - i] == v[n - 1 - i]:
        i += 1
    return i


def shared_pair_gaps_hold(s, v, t):
    """|C_{n-i-k}(s) minus C_{n-i-k}(v)| >= 2 for k = 1..t+1, i the longest shared pair."""
    n = len(s)
    i = longest_shared_pair(s, v)
    return all(multiset_difference_size(s, v, n - i - k) >= 2
               for k in range(1, t + 2) if n - i - k >= 1)


def has_wide_gap(s, v, width=3):
    return any(multiset_difference_size(s, v, l) >= width for l in range(1, len(s) + 1))


# channel

def _grouped(C):
    out = {}
    for (l, wt), m in C.items():
        out.setdefault(l, []).extend([wt] * m)
    return out


def channel_delete(C, t1, t2, asymmetric=True, seed=None, spec=None, exact=True):
    """
    Delete compositions from a full multiset.  ``spec`` maps length -> list
    of weights to delete; otherwise ``seed`` drives a random pattern with t1
    lengths (fewer when exact=False) losing min(t2, size) compositions each.
    """
    n = C.n
    if spec is None:
        rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        groups = _grouped(C)
        k = t1 if exact else rng.randint(0, t1)
        chosen = []
        for l in rng.sample(range(1, n + 1), n):
            if len(chosen) == k:
                break
            if asymmetric and (n - l + 1) in chosen:
                continue
            chosen.append(l)
        spec = {}
        for l in chosen:
            ws = groups.get(l, [])
            d = min(t2, len(ws)) if exact else rng.randint(1, min(t2, len(ws)))
            spec[l] = rng.sample(ws, d)
    if len(spec) > t1:
        raise ChannelContractError(f"{len(spec)} lengths hit, budget t1={t1}")
    c = C.counter()
    for l, ws in spec.items():
        if len(ws) > t2:
            raise ChannelContractError(f"{len(ws)} deletions at length {l}, budget t2={t2}")
        if asymmetric and l != n - l + 1 and (n - l + 1) in spec and ws and spec[n - l + 1]:
            raise ChannelContractError(f"lengths {l} and {n - l + 1} both hit")
        for wt in ws:
            if c[(l, wt)] <= 0:
                raise ChannelContractError(f"composition {(l, wt)} not present")
            c[(l, wt)] -= 1
    return CompositionMultiset(+c, n, C.kind)


# decoder

def _received(C, n, t):
    groups = {l: Counter() for l in range(1, n + 1)}
    for (l, wt), m in C.items():
        if not 1 <= l <= n:
            raise ChannelContractError(f"length {l} outside 1..{n}")
        groups[l][wt] += m
    deficient = {}
    for l in range(1, n + 1):
        d = (n - l + 1) - sum(groups[l].values())
        if d < 0:
            raise ChannelContractError(f"length {l} has too many compositions")
        if d > 2:
            raise ChannelContractError(f"length {l} lost {d} > 2 compositions")
        if d:
            deficient[l] = d
    if len(deficient) > t:
        raise ChannelContractError(f"{len(deficient)} deficient lengths exceed t={t}")
    for l in deficient:
        if (n - l + 1) in deficient:
            raise ChannelContractError(f"lengths {l} and {n - l + 1} both deficient")
    return groups, deficient


def recover_weight_sums(C, n, t=None):
    groups, deficient = _received(C, n, n if t is None else t)
    w = []
    for l in range(1, n + 1):
        src = n - l + 1 if l in deficient else l
        w.append(sum(wt * m for wt, m in groups[src].items()))
    return tuple(w)


def backtrack_decode(C, n, t, unique=True, member=None):
    """
    Depth-first reconstruction over mirrored pairs, outside in.  After pair i
    is fixed every window of length n-i has a known weight (the total minus
    a known prefix and suffix), so the received C_{n-i} must fit inside the
    prediction.  Leaves are checked against every length and the codebook.
    """
    _check_t(n, t)
    member = member or (lambda s: in_CAt(s, t))
    groups, deficient = _received(C, n, t)
    w = recover_weight_sums(C, n, t)
    sig = sigma_from_w(w, n)
    if any(x not in (0, 1, 2) for x in sig):
        raise FullDecodeFailure(f"pair weights {sig} out of range")
    h = n // 2
    total = sum(sig)
    if total != w[n - 1]:
        raise FullDecodeFailure("pair weights disagree with the total weight")
    options = {0: (("0", "0"),), 2: (("1", "1"),), 1: (("0", "1"), ("1", "0"))}
    found = []

    def fits(pre, suf, i):
        l = n - i
        pred = Counter(total - pre[p] - suf[i - p] for p in range(i + 1))
        return not (groups[l] - pred)

    def dfs(i, left, right, pre, suf):
        if i == h:
            s = left + right[::-1]
            if all(not (groups[l] - window_weights(s, l)) for l in range(1, n + 1)) and member(s):
                found.append(s)
            return
        for a, b in options[sig[i]]:
            npre = pre + [pre[-1] + (a == "1")]
            nsuf = suf + [suf[-1] + (b == "1")]
            if fits(npre, nsuf, i + 1):
                dfs(i + 1, left + a, right + b, npre, nsuf)
                if found and not unique:
                    return
                if len(found) > 1:
                    return

    dfs(0, "", "", [0], [0])
    if not found:
        raise FullDecodeFailure("no codeword is consistent with the received multiset")
    if len(found) > 1:
        raise FullDecodeFailure(f"ambiguous: {found[:2]}")
    return found[0]


def full_roundtrip_ok(s, t):
    return backtrack_decode(full_multiset(s), len(s), t) == s
