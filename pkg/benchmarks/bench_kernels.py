"""
Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--max-n 14] [--repeat 3]

Both backends are imported directly, so the selection done by
polyrec.kernels does not matter here.  Outputs are compared before timing.
"""

import argparse
import time

import numpy as np

from polyrec import _kernels_py

try:
    from polyrec import _kernels as compiled
except ImportError:
    compiled = None

KERNELS = ("ps_signature_matrix", "full_signature_matrix", "window_sum_matrix")


def best_of(fn, n, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(n)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args()
    if compiled is None:
        print("compiled extension not built; nothing to compare")
        return
    print(f"{'kernel':24} {'n':>3} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    for name in KERNELS:
        fc, fp = getattr(compiled, name), getattr(_kernels_py, name)
        for n in range(8, a.max_n + 1, 2):
            if not np.array_equal(fc(n), fp(n)):
                raise SystemExit(f"{name} disagrees at n={n}")
            tc = best_of(fc, n, a.repeat)
            tp = best_of(fp, n, a.repeat)
            print(f"{name:24} {n:>3} {tc:>11.4f} {tp:>10.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
