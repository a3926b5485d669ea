#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy fallbacks.

Runs each hot kernel on a representative workload under both backends and
prints a timing table.  The numba path is warmed once before timing so JIT
compilation is not billed to the measurement.

Usage:  python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from stab2lin import _kernels, gf2
from stab2lin.formats import load_stabilizer
from stab2lin.lincode import GeneratorMatrix, codeword_table

from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "stab2lin" / "data"


def workloads():
    rng = np.random.default_rng(0)

    rows = np.hstack(
        [rng.integers(0, 2, size=(20, 8)).astype(np.uint8), np.eye(20, dtype=np.uint8)]
    )
    yield "codeword_weight_hist (k=20, n=28)", "codeword_weight_hist", (rows, 28)

    g = GeneratorMatrix(rows[:8, :22])
    h = gf2.nullspace(g.rows)
    cols = np.array(
        [sum(int(h[i, j]) << i for i in range(h.shape[0])) for j in range(22)], np.int64
    )
    yield "coset_min_weight_hist (n=22)", "coset_min_weight_hist", (cols, 22, h.shape[0])

    code = load_stabilizer(DATA / "eight_three.stab")
    red = gf2.rref(code.matrix)
    yield (
        "normalizer_min_weight ([[8,3]], cap=4)",
        "normalizer_min_weight",
        (code.matrix, red.matrix[: red.rank], red.pivots, 8, 4),
    )

    g73 = GeneratorMatrix(
        np.array(
            [[1, 1, 1, 0, 1, 0, 0], [1, 1, 0, 1, 0, 1, 0], [1, 0, 1, 1, 0, 0, 1]],
            np.uint8,
        )
    )
    table = codeword_table(g73)
    yield (
        "bsc_trial_successes ((7,3), 5e5 trials)",
        "bsc_trial_successes",
        (table, 7, 0.05, 500_000, 1),
    )


def time_call(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    opts = parser.parse_args()

    impls = _kernels.implementations()
    if "numba" not in impls:
        print(
            "numba backend unavailable "
            f"(missing or disabled via {_kernels.ENV_FLAG}); timing numpy only"
        )

    header = f"{'workload':44s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for label, name, args in workloads():
        if "numba" in impls:
            impls["numba"][name](*args)  # warm the JIT
            t_jit, r_jit = time_call(impls["numba"][name], args, opts.repeat)
        t_np, r_np = time_call(impls["numpy"][name], args, opts.repeat)
        if "numba" in impls:
            agree = (
                np.array_equal(r_np, r_jit)
                if isinstance(r_np, np.ndarray)
                else r_np == r_jit
            )
            if not agree:
                raise SystemExit(f"backend disagreement on {label}")
            print(f"{label:44s} {t_np:9.4f}s {t_jit:9.4f}s {t_np / t_jit:7.1f}x")
        else:
            print(f"{label:44s} {t_np:9.4f}s {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
