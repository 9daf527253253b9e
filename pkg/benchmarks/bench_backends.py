#!/usr/bin/env python3
"""Benchmark the compiled BFS kernel against the pure-Python fallback.

The workload is the all-pairs sweep behind diameter computation: one BFS
per source over arithmetically generated neighbours.  Example:

    python benchmarks/bench_backends.py --delta 6 --d 4 --sources 120
"""

import argparse
import time

from cycleprefix import Params
import cycleprefix._pykernel as pykernel

try:
    import cycleprefix._speedups as speedups
except ImportError:
    speedups = None


def time_backend(backend, params, sources, repeats):
    best = float("inf")
    ecc = None
    for _ in range(repeats):
        start = time.perf_counter()
        ecc = backend.eccentricity_range(params.n, params.d, params.r, 0, sources)
        best = min(best, time.perf_counter() - start)
    return best, int(ecc.max())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--delta", type=int, default=6)
    ap.add_argument("--d", type=int, default=4)
    ap.add_argument("--r", type=int, default=0)
    ap.add_argument(
        "--sources", type=int, default=0,
        help="number of BFS sources (0 = every vertex)",
    )
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    params = Params(args.delta, args.d, args.r)
    sources = args.sources or params.count
    sources = min(sources, params.count)
    print(
        f"instance delta={params.delta} d={params.d} r={params.r}: "
        f"{params.count} vertices, degree {params.degree}, "
        f"{sources} BFS sources, best of {args.repeats}"
    )

    py_time, py_ecc = time_backend(pykernel, params, sources, args.repeats)
    print(f"  python   {py_time * 1000:10.1f} ms   (max ecc {py_ecc})")
    if speedups is None:
        print("  compiled kernel not built; skipping comparison")
        return
    c_time, c_ecc = time_backend(speedups, params, sources, args.repeats)
    print(f"  compiled {c_time * 1000:10.1f} ms   (max ecc {c_ecc})")
    if c_ecc != py_ecc:
        raise SystemExit("backends disagree; benchmark aborted")
    print(f"  speedup  {py_time / c_time:10.1f}x")


if __name__ == "__main__":
    main()
