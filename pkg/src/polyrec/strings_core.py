"""
Strings, compositions and composition multisets.

Binary strings are plain ``str`` objects over "01".  A binary composition is
the pair ``(length, weight)``; q-ary compositions are tuples of per-symbol
counts.  The weight profile ``a`` of a string is ``a[i] = wt(s[:i])`` and is
the only polynomial representation used internally: the monomial
``x^a_i y^(i - a_i)`` view exists for display only.
"""

from __future__ import annotations

import json
from collections import Counter
from itertools import accumulate

KINDS = ("prefix-suffix", "full", "length-l", "length-limited")


class CompositionError(ValueError):
    pass


def check_bits(s):
    if any(ch not in "01" for ch in s):
        raise CompositionError(f"not a binary string: {s!r}")
    return s


def reverse(s):
    return s[::-1]


def weight(s):
    return s.count("1")


def composition(s):
    """Return ``(len, wt)`` of a binary string."""
    return (len(s), s.count("1"))


def format_composition(c):
    """Text form ``0^a*1^b``; zero exponents are dropped and ``e`` is the empty composition."""
    length, wt = c
    parts = []
    if length - wt:
        parts.append(f"0^{length - wt}")
    if wt:
        parts.append(f"1^{wt}")
    return "*".join(parts) if parts else "e"


def parse_composition(text):
    text = text.strip()
    if text == "e":
        return (0, 0)
    zeros = ones = 0
    for part in text.split("*"):
        sym, _, exp = part.partition("^")
        k = int(exp) if exp else 1
        if sym == "0":
            zeros += k
        elif sym == "1":
            ones += k
        else:
            raise CompositionError(f"bad composition term {part!r}")
    return (zeros + ones, ones)


class CompositionMultiset:
    """
    Multiset of compositions with positive integer multiplicities.

    Entries are keyed by composition (a ``(len, wt)`` pair for binary, a
    count tuple for q-ary).  Instances are treated as immutable values.
    """

    __slots__ = ("n", "kind", "q", "_c", "_key")

    def __init__(self, entries, n, kind, q=None):
        if kind not in KINDS:
            raise CompositionError(f"unknown multiset kind {kind!r}")
        c = Counter(entries)
        for comp, mult in c.items():
            if mult <= 0:
                raise CompositionError(f"non-positive multiplicity for {comp}")
        self.n = n
        self.kind = kind
        self.q = q
        self._c = c
        self._key = None

    @classmethod
    def from_counter(cls, counter, n, kind, q=None):
        return cls(+Counter(counter), n, kind, q)

    def counter(self):
        return Counter(self._c)

    def items(self):
        return sorted(self._c.items())

    def total(self):
        return sum(self._c.values())

    def __getitem__(self, comp):
        return self._c.get(comp, 0)

    def __contains__(self, comp):
        return comp in self._c

    def __len__(self):
        return self.total()

    def _canon(self):
        if self._key is None:
            self._key = tuple(sorted(self._c.items()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, CompositionMultiset):
            return NotImplemented
        return self._canon() == other._canon()

    def __hash__(self):
        return hash(self._canon())

    def __repr__(self):
        return f"CompositionMultiset(n={self.n}, kind={self.kind!r}, total={self.total()})"

    def by_length(self):
        """Binary multisets only: map length -> sorted list of weights (with repeats)."""
        out = {}
        for (length, wt), mult in self.items():
            out.setdefault(length, []).extend([wt] * mult)
        return out

    def to_json(self):
        if self.q:
            entries = [{"counts": list(k), "mult": m} for k, m in self.items()]
            return {"n": self.n, "kind": self.kind, "q": self.q, "entries": entries}
        entries = [{"len": k[0], "wt": k[1], "mult": m} for k, m in self.items()]
        return {"n": self.n, "kind": self.kind, "entries": entries}

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        c = Counter()
        q = obj.get("q")
        for e in obj["entries"]:
            if "counts" in e:
                q = q or len(e["counts"])
                c[tuple(e["counts"])] += e["mult"]
            else:
                if not 0 <= e["wt"] <= e["len"]:
                    raise CompositionError(f"invalid composition {e}")
                c[(e["len"], e["wt"])] += e["mult"]
        return cls(c, obj["n"], obj["kind"], q)

    def without(self, comp, k=1):
        c = Counter(self._c)
        if c[comp] < k:
            raise CompositionError(f"{comp} has multiplicity {c[comp]} < {k}")
        c[comp] -= k
        return CompositionMultiset(+c, self.n, self.kind, self.q)


# multiset flavours

def prefix_suffix_multiset(s):
    """M(s): compositions of all prefixes and all proper suffixes (2n - 1 entries)."""
    n = len(s)
    if n < 1:
        raise CompositionError("prefix-suffix multiset needs a non-empty string")
    c = Counter()
    a = weight_profile(s)
    w = a[n]
    for j in range(1, n + 1):
        c[(j, a[j])] += 1
    for j in range(1, n):
        c[(j, w - a[n - j])] += 1
    return CompositionMultiset(c, n, "prefix-suffix")


def normalize_prefix_suffix(M):
    """Accept the 2n-entry convention (full composition listed twice) and reduce it to 2n - 1."""
    n = M.n
    c = M.counter()
    full = [k for k in c if k[0] == n]
    if len(full) == 1 and c[full[0]] == 2:
        c[full[0]] = 1
    return CompositionMultiset(c, n, "prefix-suffix")


def length_l_multiset(s, l):
    n = len(s)
    if not 1 <= l <= n:
        raise CompositionError(f"window length {l} out of range for n={n}")
    a = weight_profile(s)
    c = Counter((l, a[i + l] - a[i]) for i in range(n - l + 1))
    return CompositionMultiset(c, n, "length-l")


def _windows_upto(s, lengths, kind):
    n = len(s)
    a = weight_profile(s)
    c = Counter()
    for l in lengths:
        for i in range(n - l + 1):
            c[(l, a[i + l] - a[i])] += 1
    return CompositionMultiset(c, n, kind)


def full_multiset(s):
    """C(s): compositions of all n(n+1)/2 substrings."""
    return _windows_upto(s, range(1, len(s) + 1), "full")


def length_limited_multiset(s, r):
    n = len(s)
    if not 1 <= r <= n:
        raise CompositionError(f"r={r} out of range for n={n}")
    return _windows_upto(s, range(1, r + 1), "length-limited")


def split_by_length(M):
    """Full or limited multiset -> {l: Counter of weights}."""
    out = {}
    for (l, wt), m in M.items():
        out.setdefault(l, Counter())[wt] += m
    return out


# weight profiles

def weight_profile(s):
    """a_0..a_n with a_i = wt(s_1..s_i)."""
    return tuple(accumulate((1 if ch == "1" else 0 for ch in s), initial=0))


def check_profile(a):
    if not a or a[0] != 0:
        raise CompositionError("profile must start at 0")
    for i in range(1, len(a)):
        if a[i] - a[i - 1] not in (0, 1):
            raise CompositionError(f"profile step {a[i] - a[i - 1]} at {i}")
    return a


def reciprocal(a):
    """Profile of the reversed string: a'_i = w - a_{n-i}."""
    n = len(a) - 1
    w = a[n]
    return tuple(w - a[n - i] for i in range(n + 1))


def string_from_profile(a):
    check_profile(a)
    return "".join("1" if a[i] > a[i - 1] else "0" for i in range(1, len(a)))


def profile_monomials(a):
    """Exponent pairs (x, y) of P_s(x, y); display helper."""
    return [(ai, i - ai) for i, ai in enumerate(a)]


def format_polynomial(a):
    terms = []
    for x, y in profile_monomials(a):
        t = ""
        if x:
            t += "x" if x == 1 else f"x^{x}"
        if y:
            t += "y" if y == 1 else f"y^{y}"
        terms.append(t or "1")
    return "+".join(terms)


def equivalent(s, t):
    """M(s) == M(t), decided termwise on profiles: {a_j, w - a_{n-j}} must agree for every j."""
    if len(s) != len(t):
        raise CompositionError("length mismatch")
    a, b = weight_profile(s), weight_profile(t)
    n = len(s)
    if a[n] != b[n]:
        return False
    ra, rb = reciprocal(a), reciprocal(b)
    for j in range(n + 1):
        x, y = a[j], ra[j]
        u, v = b[j], rb[j]
        if not ((x == u and y == v) or (x == v and y == u)):
            return False
    return True
