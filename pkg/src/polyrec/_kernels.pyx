# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""
Compiled enumeration kernels.

Every function takes a length n and scans all 2^n binary strings; string
number x has s_1 as its most significant bit, so row order is lexicographic.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def ps_signature_matrix(int n):
    """Row x: for j = 1..n-1 the sorted pair (wt prefix_j, wt suffix_j), then the total weight."""
    cdef Py_ssize_t total = 1 << n
    cdef int width = 2 * n - 1
    out = np.zeros((total, width), dtype=np.uint8)
    cdef cnp.uint8_t[:, :] o = out
    cdef Py_ssize_t x
    cdef int j, p, q, bit
    cdef int bits[64]
    for x in range(total):
        for j in range(n):
            bits[j] = (x >> (n - 1 - j)) & 1
        p = 0
        q = 0
        for j in range(1, n):
            p += bits[j - 1]
            q += bits[n - j]
            if p <= q:
                o[x, 2 * j - 2] = p
                o[x, 2 * j - 1] = q
            else:
                o[x, 2 * j - 2] = q
                o[x, 2 * j - 1] = p
        o[x, width - 1] = p + bits[n - 1]
    return out


def full_signature_matrix(int n):
    """Row x: window-weight histograms for l = 1..n concatenated (block l has l+1 cells)."""
    cdef Py_ssize_t total = 1 << n
    cdef int width = n * (n + 3) // 2
    out = np.zeros((total, width), dtype=np.uint8)
    cdef cnp.uint8_t[:, :] o = out
    cdef Py_ssize_t x
    cdef int i, l, off
    cdef int pre[65]
    for x in range(total):
        pre[0] = 0
        for i in range(n):
            pre[i + 1] = pre[i] + ((x >> (n - 1 - i)) & 1)
        off = 0
        for l in range(1, n + 1):
            for i in range(n - l + 1):
                o[x, off + pre[i + l] - pre[i]] += 1
            off += l + 1
    return out


def window_sum_matrix(int n):
    """Row x: w_l = sum of weights of all length-l windows, l = 1..n."""
    cdef Py_ssize_t total = 1 << n
    out = np.zeros((total, n), dtype=np.int32)
    cdef cnp.int32_t[:, :] o = out
    cdef Py_ssize_t x
    cdef int i, l, acc
    cdef int pre[65]
    for x in range(total):
        pre[0] = 0
        for i in range(n):
            pre[i + 1] = pre[i] + ((x >> (n - 1 - i)) & 1)
        for l in range(1, n + 1):
            acc = 0
            for i in range(n - l + 1):
                acc += pre[i + l] - pre[i]
            o[x, l - 1] = acc
    return out
