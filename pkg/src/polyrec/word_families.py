"""
String families built from mirrored positions.

Dyck strings here are ones-dominant: a length-2h string of weight h whose
every prefix of length i has at least ceil(i/2) ones.  Catalan-Bertrand
strings have strictly more zeros than ones in every non-empty prefix.

All enumerations return sorted lists of ``str``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb, prod

from .equivalence import decompose


# Catalan-Bertrand strings

def is_catalan_bertrand(s):
    bal = 0
    for ch in s:
        bal += 1 if ch == "0" else -1
        if bal <= 0:
            return False
    return True


def enumerate_catalan_bertrand(i):
    out = []

    def grow(prefix, bal):
        if len(prefix) == i:
            out.append(prefix)
            return
        grow(prefix + "0", bal + 1)
        if bal > 1:
            grow(prefix + "1", bal - 1)

    grow("", 0) if i == 0 else grow("0", 1)
    return out


def count_catalan_bertrand(i):
    if i == 0:
        return 1
    if i % 2:
        return comb(i - 1, (i - 1) // 2)
    return comb(i, i // 2) // 2


# Dyck strings (ones-dominant)

def is_dyck(s):
    if len(s) % 2:
        raise ValueError("Dyck strings have even length")
    ones = 0
    for i, ch in enumerate(s, 1):
        ones += ch == "1"
        if ones < (i + 1) // 2:
            return False
    return ones == len(s) // 2


def enumerate_dyck(length):
    if length % 2:
        raise ValueError("Dyck strings have even length")
    h = length // 2
    out = []

    def grow(prefix, ones):
        i = len(prefix)
        if i == length:
            out.append(prefix)
            return
        for ch in "01":
            o = ones + (ch == "1")
            if o <= h and o >= (i + 2) // 2 and (i + 1 - o) <= h:
                grow(prefix + ch, o)

    grow("", 0)
    return out


def catalan(h):
    return comb(2 * h, h) // (h + 1)


# mirrored-position builder shared by S_R and A

def _mirror_fill(n, fixed, free, diff_ok):
    """
    Strings of even length n with the given fixed symbols (1-based position ->
    symbol, mirrors included) where each free position i <= n/2 either copies
    or complements its mirror n-i+1.  diff_ok(subsequence at the complemented
    positions) filters the result.
    """
    out = []
    for choice in product(range(4), repeat=len(free)):
        s = [""] * (n + 1)
        for p, ch in fixed.items():
            s[p] = ch
        diff = []
        for i, c in zip(free, choice):
            sym = "01"[c & 1]
            s[i] = sym
            if c >> 1:
                s[n - i + 1] = "10"[c & 1]
                diff.append(i)
            else:
                s[n - i + 1] = sym
        if diff_ok(s, diff):
            out.append("".join(s[1:]))
    return out


# S_R(n)

@lru_cache(maxsize=None)
def _sr(n):
    if n == 0:
        return ("",)
    if n == 1:
        return ("0", "1")
    if n % 2:
        h = (n - 1) // 2
        out = [t[:h] + m + t[h:] for t in _sr(n - 1) for m in "01"]
        assert len(set(out)) == len(out)
        return tuple(sorted(out))
    h = n // 2

    def ok(s, diff):
        return is_catalan_bertrand("".join(s[i] for i in [1] + diff))

    return tuple(sorted(_mirror_fill(n, {1: "0", n: "1"}, list(range(2, h + 1)), ok)))


def enumerate_SR(n):
    return list(_sr(n))


def count_SR(n):
    if n == 0:
        return 1
    if n == 1:
        return 2
    if n % 2:
        return 2 * count_SR(n - 1)
    h = n // 2
    return sum(comb(h - 1, i) * 2 ** (h - 1 - i) * comb(i, i // 2) for i in range(h))


def in_SR(s):
    n = len(s)
    if n == 0:
        return True
    if n == 1:
        return True
    if n % 2:
        h = (n - 1) // 2
        return in_SR(s[:h] + s[h + 1:])
    if s[0] != "0" or s[-1] != "1":
        return False
    diff = [s[i - 1] for i in range(1, n // 2 + 1) if s[i - 1] != s[n - i]]
    return is_catalan_bertrand("".join(diff))


def f_count(m):
    """Number of length-m strings with no equal-weight prefix/suffix pair below m."""
    if m == 0:
        return 1
    if m == 1:
        return 2
    return 2 * count_SR(m)


# A(m) and D(m)

@lru_cache(maxsize=None)
def _a(m):
    if m % 2 or m < 4:
        raise ValueError("A(m) needs even m >= 4")
    h = m // 2
    fixed = {1: "1", h: "0", h + 1: "1", m: "0"}

    def ok(s, diff):
        sub = "".join(s[i] for i in diff)
        return len(sub) % 2 == 0 and is_dyck(sub)

    return tuple(sorted(_mirror_fill(m, fixed, list(range(2, h)), ok)))


def enumerate_A(m):
    return list(_a(m))


def count_A(m):
    if m % 2 or m < 4:
        raise ValueError("A(m) needs even m >= 4")
    h = m // 2
    return sum(comb(h - 2, 2 * i) * 2 ** (h - 2 - 2 * i) * catalan(i) for i in range(m // 4))


def enumerate_D(m):
    if m % 2 or m < 2:
        raise ValueError("D(m) needs even m >= 2")
    if m == 2:
        return ["00", "11"]
    a = _a(m)
    return sorted(set(a) | {u[::-1] for u in a})


def count_D(m):
    return 2 if m == 2 else 2 * count_A(m)


def satisfies_block_condition(u):
    """Halves of u balance in weight, and no shorter prefix/suffix pair does."""
    m = len(u)
    h = m // 2
    if u[:h].count("1") != u[h:].count("1"):
        return False
    return all(u[:k].count("1") != u[m - k:].count("1") for k in range(1, h))


# index tuples

def enumerate_index_tuples(n, restricted=True):
    """
    Tuples (0, j_1, ..., j_l, n - j_l) with 1 <= j_1 < ... < j_l <= n/2.
    restricted=True keeps those with at most one gap >= 2 (the set P(n)).
    """
    out = []
    h = n // 2
    for ell in range(h + 1):
        for js in combinations(range(1, h + 1), ell):
            j = (0,) + js + (n - (js[-1] if js else 0),)
            gaps = [j[i] - j[i - 1] for i in range(1, len(j))]
            if restricted and sum(g >= 2 for g in gaps) > 1:
                continue
            out.append(j)
    return out


# block factorization

@dataclass(frozen=True)
class BlockFactorization:
    j: tuple
    r: tuple   # r^(1) .. r^(l+1)
    t: tuple   # t^(1) .. t^(l)

    def reassemble(self):
        return "".join(self.r) + "".join(x[::-1] for x in reversed(self.t))

    def paired_blocks(self):
        """r^(i) (t^(i))* for i = 1..l."""
        return [r + t[::-1] for r, t in zip(self.r, self.t)]


def factorize(s):
    n = len(s)
    j = decompose(s).j if n >= 2 else (0, n)
    ell = len(j) - 2
    r, t = [], []
    for i in range(1, ell + 1):
        r.append(s[j[i - 1]:j[i]])
        t.append(s[n - j[i]:n - j[i - 1]][::-1])
    r.append(s[j[ell]:n - j[ell]])
    return BlockFactorization(j, tuple(r), tuple(t))


def _assemble(blocks, final):
    """blocks are the paired strings r^(i)(t^(i))*; returns r^(1)..r^(l) final (t^(l))*..(t^(1))*."""
    left = "".join(u[:len(u) // 2] for u in blocks)
    right = "".join(u[len(u) // 2:] for u in reversed(blocks))
    return left + final + right


def _final_choices(g, both):
    sr = _sr(g)
    if not both:
        return sorted({x[::-1] for x in sr})
    return sorted(set(sr) | {x[::-1] for x in sr})


def _from_tuples(n, restricted, pair_choices, final_choices):
    out = set()
    for j in enumerate_index_tuples(n, restricted):
        gaps = [j[i] - j[i - 1] for i in range(1, len(j))]
        options = [pair_choices(g) for g in gaps[:-1]]
        for combo in product(*options):
            for fin in final_choices(gaps[-1]):
                out.add(_assemble(combo, fin))
    return sorted(out)


def enumerate_U(n):
    """Paired blocks in D(2g), final block in S_R or its reversal, at most one wide gap."""
    return _from_tuples(n, True, lambda g: enumerate_D(2 * g), lambda g: _final_choices(g, True))


def _g_weight(gap, final):
    if gap == 0:
        return 1
    if final:
        return f_count(gap)
    return count_D(2 * gap)


def count_U(n):
    total = 0
    for j in enumerate_index_tuples(n, True):
        gaps = [j[i] - j[i - 1] for i in range(1, len(j))]
        total += prod(_g_weight(g, k == len(gaps) - 1) for k, g in enumerate(gaps))
    return total


def enumerate_Uprime(n):
    """u_1..u_l u_{l+1} u_l..u_1 with every u_i or its reversal in S_R, at most one wide gap."""
    def pairs(g):
        return [u + u for u in _final_choices(g, True)]
    return _from_tuples(n, True, pairs, lambda g: _final_choices(g, True))


def count_Uprime(n):
    total = 0
    for j in enumerate_index_tuples(n, True):
        gaps = [j[i] - j[i - 1] for i in range(1, len(j))]
        total += prod(f_count(g) for g in gaps)
    return total
