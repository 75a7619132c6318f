"""Benchmark the compiled kernels against the numpy fallback.

Usage: python benchmarks/bench_kernels.py [--sizes 4 16 64] [--repeats 2000]
"""

import argparse
import time

import numpy as np

from zonalg import _kernels_py

try:
    from zonalg import _kernels
except ImportError:
    _kernels = None


def timeit(fn, args, repeats):
    best = float("inf")
    for _ in range(5):
        t0 = time.perf_counter()
        for _ in range(repeats):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / repeats)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[2, 4, 8, 16, 64])
    parser.add_argument("--repeats", type=int, default=2000)
    args = parser.parse_args()

    if _kernels is None:
        print("compiled extension not available; nothing to compare")
        return

    rng = np.random.default_rng(0)
    print(f"{'n':>4} {'kernel':>14} {'numpy us':>10} {'compiled us':>12} {'speedup':>8}")
    for n in args.sizes:
        a = np.sort(rng.uniform(0, np.pi, n))
        la = rng.uniform(0.1, 10, n)
        b = np.sort(rng.uniform(0, np.pi, n))
        lb = rng.uniform(0.1, 10, n)
        thetas = rng.uniform(0, 2 * np.pi, 64)

        cases = [
            ("pair_sin_sum", (a, la, b, lb)),
            ("support_batch", (a, la, 1.0, thetas)),
        ]
        for name, call_args in cases:
            t_py = timeit(getattr(_kernels_py, name), call_args, args.repeats)
            t_c = timeit(getattr(_kernels, name), call_args, args.repeats)
            print(f"{n:>4} {name:>14} {t_py * 1e6:>10.2f} {t_c * 1e6:>12.2f} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
