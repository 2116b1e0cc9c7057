"""Pure-Python twins of the compiled kernels (same signatures, same output)."""

import numpy as np


def _bits(x, n):
    return [(x >> (n - 1 - j)) & 1 for j in range(n)]


def _prefix(bits):
    pre = [0]
    for b in bits:
        pre.append(pre[-1] + b)
    return pre


def ps_signature_matrix(n):
    total = 1 << n
    width = 2 * n - 1
    out = np.zeros((total, width), dtype=np.uint8)
    for x in range(total):
        bits = _bits(x, n)
        row = []
        p = q = 0
        for j in range(1, n):
            p += bits[j - 1]
            q += bits[n - j]
            row.extend((p, q) if p <= q else (q, p))
        row.append(sum(bits))
        out[x] = row
    return out


def full_signature_matrix(n):
    total = 1 << n
    width = n * (n + 3) // 2
    out = np.zeros((total, width), dtype=np.uint8)
    for x in range(total):
        pre = _prefix(_bits(x, n))
        row = [0] * width
        off = 0
        for l in range(1, n + 1):
            for i in range(n - l + 1):
                row[off + pre[i + l] - pre[i]] += 1
            off += l + 1
        out[x] = row
    return out


def window_sum_matrix(n):
    total = 1 << n
    out = np.zeros((total, n), dtype=np.int32)
    for x in range(total):
        pre = _prefix(_bits(x, n))
        out[x] = [sum(pre[i + l] - pre[i] for i in range(n - l + 1)) for l in range(1, n + 1)]
    return out
