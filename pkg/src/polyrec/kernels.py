"""
Kernel selection.

The compiled extension is used when it imports; otherwise the pure-Python
twin is used.  Setting POLYREC_PURE=1 forces the fallback.
"""

import os

from . import _kernels_py

MAX_N = 20

if os.environ.get("POLYREC_PURE") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"


def _check(n):
    if not 1 <= n <= MAX_N:
        raise ValueError(f"kernel length {n} outside 1..{MAX_N}")


def ps_signature_matrix(n):
    _check(n)
    return _impl.ps_signature_matrix(n)


def full_signature_matrix(n):
    _check(n)
    return _impl.full_signature_matrix(n)


def window_sum_matrix(n):
    _check(n)
    return _impl.window_sum_matrix(n)
