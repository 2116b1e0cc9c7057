"""
Length-limited reconstruction over a q-ary alphabet {0, .., q-1}.

A codeword of C_r is a Lyndon word l of length r followed by enough copies
of the top symbol q-1 that the word ends in a run of exactly r of them.
Among the length-r windows only the last one is all top symbols, which
anchors a right-to-left rebuild from C_r(s).

q-ary strings are tuples of ints; compositions are count tuples.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import log

from .strings_core import CompositionMultiset


class NotACodeword(Exception):
    pass


def parse_qary(text, q=None):
    """'0,0,3,1' or '0031' (single digits) -> tuple of ints."""
    text = text.strip()
    parts = text.split(",") if "," in text else list(text)
    w = tuple(int(p) for p in parts if p != "")
    if q is not None and any(not 0 <= x < q for x in w):
        raise ValueError(f"symbol outside 0..{q - 1}")
    return w


def format_qary(w):
    return ",".join(str(x) for x in w)


def _as_tuple(w):
    return parse_qary(w) if isinstance(w, str) else tuple(w)


# Lyndon words

def is_lyndon(w):
    """Strictly smaller than each proper rotation (so also aperiodic)."""
    w = _as_tuple(w)
    n = len(w)
    if n == 0:
        return False
    return all(w < w[k:] + w[:k] for k in range(1, n))


def next_lyndon(w, r, q):
    """Successor of w among Lyndon words of length <= r in lexicographic order, or None."""
    w = _as_tuple(w)
    if not is_lyndon(w) or len(w) > r:
        raise ValueError(f"{format_qary(w)} is not a Lyndon word of length <= {r}")
    s = [w[i % len(w)] for i in range(r)]
    while s and s[-1] == q - 1:
        s.pop()
    if not s:
        return None
    s[-1] += 1
    return tuple(s)


def lyndon_up_to(r, q):
    """All Lyndon words of length <= r, sorted, by iterating next_lyndon from (0,)."""
    w = (0,)
    while w is not None:
        yield w
        w = next_lyndon(w, r, q)


def lyndon_words(r, q):
    return [w for w in lyndon_up_to(r, q) if len(w) == r]


def mobius(n):
    if n < 1:
        raise ValueError("n >= 1")
    mu, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            mu = -mu
        p += 1
    return -mu if n > 1 else mu


def witt_count(r, q):
    if r < 1 or q < 2:
        raise ValueError("need r >= 1, q >= 2")
    total = sum(mobius(d) * q ** (r // d) for d in range(1, r + 1) if r % d == 0)
    return total // r


# codes

def trailing_top(w, q):
    m = 0
    for x in reversed(w):
        if x != q - 1:
            break
        m += 1
    return m


def encode_Cr(l, r, q, n=None):
    """l a^(r-m); padded with the top symbol to length n when given."""
    l = _as_tuple(l)
    if len(l) != r or not is_lyndon(l):
        raise ValueError("message must be a Lyndon word of length r")
    s = l + (q - 1,) * (r - trailing_top(l, q))
    if n is not None:
        if n < 2 * r:
            raise ValueError("padded length must be at least 2r")
        s = s + (q - 1,) * (n - len(s))
    return s


def build_Cr(r, q):
    from .ps_codes import Codebook
    if r < 2:
        raise ValueError("r >= 2")
    return Codebook(None, tuple(encode_Cr(l, r, q) for l in lyndon_words(r, q)), "Cr", {"r": r, "q": q})


def build_Cr_n(r, q, n):
    from .ps_codes import Codebook
    if r < 2:
        raise ValueError("r >= 2")
    return Codebook(n, tuple(encode_Cr(l, r, q, n) for l in lyndon_words(r, q)), "Cr", {"r": r, "q": q, "n": n})


def in_Cr(s, r, q, n=None):
    s = _as_tuple(s)
    if len(s) < r + 1 or not is_lyndon(s[:r]):
        return False
    if any(x != q - 1 for x in s[r:]):
        return False
    want = n if n is not None else 2 * r - trailing_top(s[:r], q)
    return len(s) == want


# q-ary multisets

def qary_composition(w, q):
    c = [0] * q
    for x in w:
        c[x] += 1
    return tuple(c)


def qary_window_multiset(s, l, q):
    s = _as_tuple(s)
    if not 1 <= l <= len(s):
        raise ValueError(f"window length {l} out of range")
    c = Counter(qary_composition(s[i:i + l], q) for i in range(len(s) - l + 1))
    return CompositionMultiset(c, len(s), "length-l", q)


def qary_limited_multiset(s, r, q):
    s = _as_tuple(s)
    c = Counter()
    for l in range(1, r + 1):
        for i in range(len(s) - l + 1):
            c[qary_composition(s[i:i + l], q)] += 1
    return CompositionMultiset(c, len(s), "length-limited", q)


def rll_decode(M, r, q, n=None, unique=True):
    """
    Rebuild s from C_r(s) (or C_{<=r}(s), whose length-r part is used).
    The all-top windows fix the trailing run; every earlier window adds one
    unknown symbol in front of r-1 known ones.  Branches are explored in
    symbol order and every complete solution must be a codeword.
    """
    windows = Counter({k: m for k, m in M.items() if sum(k) == r})
    if not windows:
        raise NotACodeword("no windows of length r")
    top = tuple([0] * (q - 1) + [r])
    k = windows[top]
    if k < 1:
        raise NotACodeword("all-top window missing")
    L = sum(windows.values()) + r - 1
    if n is not None and L != n:
        raise NotACodeword(f"multiset implies length {L}, expected {n}")
    suffix = [q - 1] * (r + k - 1)
    windows[top] = 0
    solutions = []

    def grow(suffix, remaining):
        if remaining == 0:
            s = tuple(suffix)
            if in_Cr(s, r, q, n):
                solutions.append(s)
            return
        base = list(qary_composition(suffix[:r - 1], q))
        for x in range(q):
            base[x] += 1
            comp = tuple(base)
            base[x] -= 1
            if windows[comp] > 0:
                windows[comp] -= 1
                grow([x] + suffix, remaining - 1)
                windows[comp] += 1
                if solutions and (not unique or len(solutions) > 1):
                    return

    grow(suffix, L - len(suffix))
    if not solutions:
        raise NotACodeword("no codeword is consistent with the multiset")
    if len(solutions) > 1:
        raise NotACodeword("several codewords fit the multiset")
    return solutions[0]


@dataclass(frozen=True)
class RateReport:
    r: int
    q: int
    size: int
    log_q_size: float
    avg_length: float
    rate: float


def rate_report(r, q):
    words = lyndon_words(r, q)
    size = len(words)
    avg = sum(2 * r - trailing_top(l, q) for l in words) / size
    lq = log(size, q)
    return RateReport(r, q, size, lq, avg, lq / avg)
