#!/usr/bin/env python3
"""Benchmark the compiled path kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--sizes 1000,10000,100000]
"""

import argparse
import timeit

import numpy as np

from langlie import kernels


def time_call(fn, *args, repeat=5):
    best = min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="1000,10000,100000",
                        help="comma-separated path lengths")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = {}
    backends["pure"] = kernels.get_backend("pure")
    try:
        backends["cython"] = kernels.get_backend("cython")
    except ImportError:
        print("compiled extension unavailable; timing the fallback only")

    cases = {
        "langlie_path": lambda impl, u: impl.langlie_path(
            kernels.PROBIT, 3.333, 9.999, -1.5, 1.5, u),
        "coupled_pair": lambda impl, u: impl.coupled_langlie_pair(
            kernels.PROBIT, 0.0, 1.0, -1.0, 1.0, 0.157, u),
        "reflected_walk": lambda impl, u: impl.reflected_walk_path(0.25, u),
        "rm_path": lambda impl, u: impl.rm_path(
            kernels.PROBIT, 3.333, 9.999, 0.0, 1.5, u),
    }

    print(f"{'kernel':<16}{'n':>9}" + "".join(f"{name:>14}" for name in backends)
          + ("" if len(backends) < 2 else f"{'speedup':>10}"))
    for name, call in cases.items():
        for n in sizes:
            u = np.random.default_rng(0).random(n)
            times = {b: time_call(lambda: call(impl, u))
                     for b, impl in backends.items()}
            row = f"{name:<16}{n:>9}" + "".join(
                f"{times[b] * 1e3:>12.2f}ms" for b in backends)
            if len(times) == 2:
                row += f"{times['pure'] / times['cython']:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
