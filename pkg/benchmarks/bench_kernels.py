#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the three hottest sweeps (determinant census, brute-force inverse scan,
power-rule vs polynomial-route pair scan) on a few representative ring sizes
and prints a speedup table.  The first numba call per kernel includes JIT
compilation; a warmup pass is timed separately so the steady-state numbers
are honest.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from radring.kernels import numba_impl, numpy_impl

CASES = [
    ("det census", "unital_dets", (31, 3, 5)),
    ("det census", "unital_dets", (13, 4, 6)),
    ("det census", "unital_dets", (55, 2, 3)),
    ("inverse scan", "inverse_exists_flags", (13, 3, 5)),
    ("inverse scan", "inverse_exists_flags", (55, 2, 3)),
    ("pair scan", "mul_pair_scan", (13, 3, 5)),
    ("pair scan", "mul_pair_scan", (45, 2, 7)),
]


def _time(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return int(a) == int(b)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    t0 = time.perf_counter()
    numba_impl.unital_dets(5, 2, 1)
    numba_impl.inverse_exists_flags(5, 2, 1)
    numba_impl.mul_pair_scan(5, 2, 1)
    warmup = time.perf_counter() - t0
    print(f"numba warmup (JIT, cached afterwards): {warmup:.2f} s\n")

    header = f"{'kernel':<14} {'n,m,r':<12} {'numpy':>10} {'numba':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, fname, case in CASES:
        np_time, np_out = _time(getattr(numpy_impl, fname), case, args.repeat)
        nb_time, nb_out = _time(getattr(numba_impl, fname), case, args.repeat)
        assert _same(np_out, nb_out), f"backend mismatch on {fname}{case}"
        print(f"{label:<14} {str(case):<12} {np_time * 1e3:9.1f}ms {nb_time * 1e3:9.1f}ms "
              f"{np_time / nb_time:7.1f}x")
    print("\nboth backends returned identical results on every case")


if __name__ == "__main__":
    main()
