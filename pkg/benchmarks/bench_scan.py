#!/usr/bin/env python3
"""Benchmark the compiled scan kernels against the pure-Python twins.

Times the three hot sweeps (P-family census, affine root scan, linearized
kernel count) on both backends and prints the speedup.

    python benchmarks/bench_scan.py --k 10
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from gf2tri import _scan_py, make_field
from gf2tri.tower import ExtContext

try:
    from gf2tri import _scanc
except ImportError:
    _scanc = None


def time_it(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_backend(name, mod, exp, log, m, el, ext_tabs, ext_m, coeffs):
    rows = []

    def census():
        hist = [0] * (m + 2) if name == "python" else np.zeros(m + 2, dtype=np.int64)
        mod.census_p(exp, log, m, el, 1, m + 1, hist)

    rows.append(("census_p (all a)", time_it(census)))
    rows.append(("roots_p (one a)", time_it(lambda: [mod.roots_p(exp, log, m, a, el) for a in range(1, 65)]) / 64))
    c2, e2, c1, e1, c0 = coeffs
    eexp, elog = ext_tabs
    rows.append(("affine3 kernel count", time_it(lambda: [mod.count_affine3(eexp, elog, ext_m, c2, e2, c1, e1, c0) for _ in range(16)]) / 16))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=10)
    ap.add_argument("--l", type=int, default=1)
    args = ap.parse_args()

    ctx = make_field(args.k)
    exp, log = ctx.tables
    m = ctx.order - 1
    tw = ExtContext(make_field(max(2, args.k // 2)))  # extension has ~the same size
    ext = tw.ext
    eexp, elog = ext.tables
    ae = tw.embed(3 % tw.base.order)
    r = 1
    coeffs = (ext.mul(ext.frob(r, args.l), ext.frob(ae, args.l)), 2 * args.l,
              1, tw.base.k + args.l, ext.mul(r, ae))

    py_exp, py_log = list(exp), list(log)
    py_eexp, py_elog = list(eexp), list(elog)
    py_rows = bench_backend("python", _scan_py, py_exp, py_log, m, args.l,
                            (py_eexp, py_elog), ext.order - 1, coeffs)

    print(f"GF(2^{args.k}) sweeps, l={args.l}; extension GF(2^{ext.k}) for the kernel count\n")
    print(f"{'kernel':<24}{'python':>12}{'compiled':>12}{'speedup':>10}")
    if _scanc is None:
        for name, t in py_rows:
            print(f"{name:<24}{t * 1e3:>10.2f}ms{'n/a':>12}{'n/a':>10}")
        print("\ncompiled backend not built (install with the Cython extension to compare)")
        return
    np_exp = np.asarray(exp, dtype=np.int64)
    np_log = np.asarray(log, dtype=np.int64)
    np_eexp = np.asarray(eexp, dtype=np.int64)
    np_elog = np.asarray(elog, dtype=np.int64)
    c_rows = bench_backend("compiled", _scanc, np_exp, np_log, m, args.l,
                           (np_eexp, np_elog), ext.order - 1, coeffs)
    for (name, tp), (_, tc) in zip(py_rows, c_rows):
        print(f"{name:<24}{tp * 1e3:>10.2f}ms{tc * 1e3:>10.2f}ms{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
