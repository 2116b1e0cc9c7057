"""
Swap calculus on weight profiles.

A string s of length n splits at the indices j <= n/2 where its prefix and
suffix of length j have equal weight.  Between two consecutive split points
the prefix/suffix weight difference keeps one sign, and flipping that sign
(taking the reversed string's profile on the interval) never changes M(s).
The equivalence class E(s) is generated by such flips over the wide gaps I_s.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .strings_core import reciprocal, string_from_profile, weight_profile


@dataclass(frozen=True)
class PSDecomposition:
    n: int
    j: tuple          # (j_0 = 0, j_1, ..., j_l, j_{l+1} = n - j_l)
    D: frozenset      # degrees where the profiles of s and s* differ
    I: frozenset      # gap numbers i (1-based) with j_i - j_{i-1} >= 2

    @property
    def ell(self):
        return len(self.j) - 2

    def gaps(self):
        return [self.j[i] - self.j[i - 1] for i in range(1, len(self.j))]

    def interval(self, i):
        """Degrees strictly inside gap i."""
        return range(self.j[i - 1] + 1, self.j[i])


def decompose(s):
    n = len(s)
    if n < 2:
        return PSDecomposition(n, (0, n), frozenset(), frozenset())
    a = weight_profile(s)
    ra = reciprocal(a)
    js = [0] + [j for j in range(1, n // 2 + 1) if a[j] == ra[j]]
    js.append(n - js[-1])
    D = frozenset(i for i in range(1, n) if a[i] != ra[i])
    I = frozenset(i for i in range(1, len(js)) if js[i] - js[i - 1] >= 2)
    return PSDecomposition(n, tuple(js), D, I)


def _swap_profile(a, dec, A):
    n = dec.n
    w = a[n]
    b = list(a)
    for i in A:
        for j in dec.interval(i):
            b[j] = w - a[n - j]
            b[n - j] = w - a[j]
    return tuple(b)


def swap_one(s, A, dec=None):
    dec = dec or decompose(s)
    A = frozenset(A)
    if not A <= dec.I:
        raise ValueError(f"{sorted(A)} is not a subset of I_s = {sorted(dec.I)}")
    # a flipped profile is always legal; string_from_profile re-checks the steps
    return string_from_profile(_swap_profile(weight_profile(s), dec, A))


def swap(s, A):
    """swap(s, A) = swap_1(s, A) | swap_1(s*, A); the reversal has the same split points."""
    dec = decompose(s)
    return {swap_one(s, A, dec), swap_one(s[::-1], A, dec)}


def _subsets(items):
    items = sorted(items)
    for k in range(len(items) + 1):
        for c in combinations(items, k):
            yield frozenset(c)


def complement_free_family(I):
    """One subset from every pair {A, I \\ A}: the one whose sorted tuple is smaller."""
    I = frozenset(I)
    fam = []
    for A in _subsets(I):
        B = I - A
        if tuple(sorted(A)) <= tuple(sorted(B)):
            fam.append(A)
    return fam


def equivalence_class(s):
    if len(s) < 2:
        return {s}
    dec = decompose(s)
    out = set()
    for A in complement_free_family(dec.I):
        out.add(swap_one(s, A, dec))
        out.add(swap_one(s[::-1], A, dec))
    return out


def class_size(s):
    return 2 ** len(decompose(s).I) if len(s) >= 2 else 1


def is_uniquely_reconstructible_up_to_reversal(s):
    return len(s) < 2 or len(decompose(s).I) <= 1


def max_class_size(n):
    if n < 2:
        raise ValueError("max class size is defined for n >= 2")
    return 2 ** ((n - 2) // 4 + 1)


def dominant_representative(s):
    """The class member whose prefixes are never lighter than its suffixes (pointwise max profile)."""
    a = weight_profile(s)
    ra = reciprocal(a)
    return string_from_profile(tuple(max(x, y) for x, y in zip(a, ra)))
