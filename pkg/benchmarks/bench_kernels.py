#!/usr/bin/env python3
"""Benchmark the exact-search kernels: numba JIT vs pure-Python fallback.

Usage:
    python benchmarks/bench_kernels.py [--repeats N]

The same kernel source runs on both paths (MULTIDOM_NUMBA=0 selects the
fallback at import time); here both are timed in one process via the
undecorated py_func, after asserting they return identical results.
"""

import argparse
import time

import numpy as np

from multidom import DominationSpec, gnp
from multidom._kernels import (
    USING_NUMBA,
    function_search_min_weight,
    python_impl,
    set_search_fixed_size,
    suffix_counts,
)


def _time(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_set_search(n=16, p=0.35, seed=3, repeats=3):
    g = gnp(n, p, seed)
    spec = DominationSpec.k_tuple(2)
    assert spec.feasibility(g)[0]
    cindptr, cindices = g.csr(closed=True)
    suffix = suffix_counts(cindptr, cindices, n)
    k_req, l_req = spec.requirements()

    def run(kernel):
        total_nodes = 0
        for t in range(n + 1):
            status, members, nodes = kernel(
                cindptr, cindices, suffix, t, k_req, l_req, 10**9
            )
            total_nodes += nodes
            if status == 1:
                return t, total_nodes
        raise AssertionError("no feasible size found")

    set_search_fixed_size(cindptr, cindices, suffix, 1, k_req, l_req, 10)  # warm JIT
    jit_t, jit_res = _time(run, set_search_fixed_size, repeats=repeats)
    py_t, py_res = _time(run, python_impl(set_search_fixed_size), repeats=repeats)
    assert jit_res == py_res, "paths disagree"
    return f"set search  n={n} ktuple:2 (size {jit_res[0]}, {jit_res[1]} nodes)", jit_t, py_t


def bench_function_search(n=13, p=0.3, seed=5, repeats=3):
    g = gnp(n, p, seed)
    nindptr, nindices = g.csr(closed=True)
    caps = np.full(n, 2, dtype=np.int64)
    demands = np.full(n, 2, dtype=np.int64)
    best_init = int(caps.sum())
    args = (nindptr, nindices, caps, demands, 10**9, best_init)

    function_search_min_weight(*args)  # warm JIT
    jit_t, jit_res = _time(function_search_min_weight, *args, repeats=repeats)
    py_t, py_res = _time(python_impl(function_search_min_weight), *args, repeats=repeats)
    assert jit_res[1] == py_res[1] and (jit_res[2] == py_res[2]).all()
    return f"func search n={n} bracek:2 (weight {jit_res[1]}, {jit_res[3]} nodes)", jit_t, py_t


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    if not USING_NUMBA:
        print("note: MULTIDOM_NUMBA disabled numba; 'jit' column is the fallback too")
    print(f"{'case':55s} {'jit':>10s} {'python':>10s} {'speedup':>8s}")
    for bench in (bench_set_search, bench_function_search):
        label, jit_t, py_t = bench(repeats=args.repeats)
        print(f"{label:55s} {jit_t * 1e3:9.2f}ms {py_t * 1e3:9.2f}ms {py_t / jit_t:7.1f}x")


if __name__ == "__main__":
    main()
