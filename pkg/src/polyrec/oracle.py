"""
Brute-force ground truth.

All 2^n strings are grouped by a literal canonical form of their multiset:
per length, the sorted prefix/suffix weights (prefix-suffix kind) or the
window-weight histogram (full kind).  Rows are hashed to bytes for grouping;
two rows sharing a bucket are equal byte strings, so no collision handling
beyond the dictionary itself is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import kernels

CAPS = {"ps": 16, "full": 14}


class OracleCapExceeded(ValueError):
    pass


def to_bits(x, n):
    return format(x, f"0{n}b") if n else ""


@dataclass(frozen=True)
class ClassPartition:
    n: int
    kind: str
    classes: tuple                        # tuple of tuples of strings, sorted
    index: dict = field(compare=False)    # string -> class id

    def class_of(self, s):
        return set(self.classes[self.index[s]])

    def sizes(self):
        return [len(c) for c in self.classes]


def _partition(n, kind, cap):
    cap = CAPS[kind] if cap is None else cap
    if n > cap:
        raise OracleCapExceeded(f"n={n} exceeds the {kind} oracle cap {cap}")
    if n == 0:
        return ClassPartition(0, kind, (("",),), {"": 0})
    mat = kernels.ps_signature_matrix(n) if kind == "ps" else kernels.full_signature_matrix(n)
    mat = np.ascontiguousarray(mat)
    groups = {}
    for x in range(mat.shape[0]):
        groups.setdefault(mat[x].tobytes(), []).append(x)
    # rows are visited in increasing x, so each group is already sorted;
    # order classes by their smallest member
    ordered = sorted(groups.values(), key=lambda g: g[0])
    classes = tuple(tuple(to_bits(x, n) for x in g) for g in ordered)
    index = {s: k for k, cl in enumerate(classes) for s in cl}
    return ClassPartition(n, kind, classes, index)


@lru_cache(maxsize=None)
def partition_by_ps_multiset(n, cap=None):
    return _partition(n, "ps", cap)


@lru_cache(maxsize=None)
def partition_by_full_multiset(n, cap=None):
    return _partition(n, "full", cap)


def oracle_unique_set(n, cap=None):
    """Strings whose class is {s} or {s, s*}."""
    out = set()
    for cl in partition_by_ps_multiset(n, cap).classes:
        if len(cl) == 1 or (len(cl) == 2 and cl[0] == cl[1][::-1]):
            out.update(cl)
    return out


def oracle_max_class(n, cap=None):
    return max(partition_by_ps_multiset(n, cap).sizes())


def oracle_class_count(n, cap=None):
    return len(partition_by_ps_multiset(n, cap).classes)


def oracle_sigma(n):
    """Direct pair weights sigma_i = s_i + s_{n-i+1} for all strings; shape (2^n, n/2)."""
    x = np.arange(1 << n, dtype=np.int64)
    bits = ((x[:, None] >> (n - 1 - np.arange(n))) & 1).astype(np.int32)
    h = n // 2
    return bits[:, :h] + bits[:, ::-1][:, :h]


def lyndon_words_bruteforce(r, q):
    """Sorted Lyndon words of length r over 0..q-1 by comparing every rotation (vectorized)."""
    total = q ** r
    if total > 1 << 24:
        raise OracleCapExceeded(f"q^r = {total} too large")
    x = np.arange(total, dtype=np.int64)
    digits = np.empty((total, r), dtype=np.int64)
    y = x.copy()
    for k in range(r - 1, -1, -1):
        digits[:, k] = y % q
        y //= q
    weights = q ** np.arange(r - 1, -1, -1, dtype=np.int64)
    keep = np.ones(total, dtype=bool)
    for k in range(1, r):
        rot = np.roll(digits, -k, axis=1) @ weights
        keep &= x < rot
    return [tuple(int(d) for d in row) for row in digits[keep]]
