#!/usr/bin/env python3
"""Benchmark the compiled sparse kernel against the pure-Python fallback.

Two workloads: raw dense homogeneous products (the kernel in isolation)
and a full formal-group-law context build (the kernel as used).  Run
after `pip install -e .`; if the extension did not build, only the pure
numbers are reported.

    python benchmarks/bench_kernel.py [--trunc 12] [--repeat 3]
"""

import argparse
import time

from cobord import _kernel_py

try:
    from cobord import _kernel_cy
except ImportError:
    _kernel_cy = None

from cobord.partitions import partitions_of


def dense_terms(weight_lo, weight_hi):
    terms = {}
    value = 1
    for n in range(weight_lo, weight_hi + 1):
        for alpha in partitions_of(n):
            value = (value * 31 + 17) % 10_000_019
            terms[alpha] = value - 5_000_000
    return terms


def bench_raw(kernel, trunc, repeat):
    x = dense_terms(0, trunc)
    y = dense_terms(0, trunc)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for _ in range(20):
            kernel.mul_terms(x, y, trunc, None)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_fgl(kernel_name, trunc, repeat):
    import os
    import subprocess
    import sys

    # Fresh process per run so the context caches start cold.
    code = (
        "import time, cobord.fgl as f; t0=time.perf_counter();"
        f"ctx=f.context({trunc}); ctx.fgl_sum; ctx.n_series(-1);"
        "ctx.landweber_coeffs(2); ctx.landweber_coeffs(3);"
        "print(time.perf_counter()-t0)"
    )
    env = dict(os.environ)
    env["COBORD_PURE"] = "1" if kernel_name == "pure" else ""
    best = float("inf")
    for _ in range(repeat):
        out = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env
        )
        best = min(best, float(out.stdout.strip()))
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trunc", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rows = []
    raw_py = bench_raw(_kernel_py, args.trunc, args.repeat)
    rows.append(("raw products x20", "pure", raw_py, 1.0))
    if _kernel_cy is not None:
        raw_cy = bench_raw(_kernel_cy, args.trunc, args.repeat)
        rows.append(("raw products x20", "compiled", raw_cy, raw_py / raw_cy))

    fgl_py = bench_fgl("pure", args.trunc, args.repeat)
    rows.append(("fgl context build", "pure", fgl_py, 1.0))
    if _kernel_cy is not None:
        fgl_cy = bench_fgl("compiled", args.trunc, args.repeat)
        rows.append(("fgl context build", "compiled", fgl_cy, fgl_py / fgl_cy))

    print(f"{'workload':<20} {'kernel':<10} {'seconds':>10} {'speedup':>9}")
    for name, kernel, secs, speedup in rows:
        print(f"{name:<20} {kernel:<10} {secs:>10.4f} {speedup:>8.2f}x")
    if _kernel_cy is None:
        print("(compiled kernel not built; showing pure numbers only)")


if __name__ == "__main__":
    main()
