#!/usr/bin/env python3
"""Benchmark the Pieri enumeration kernel: compiled backend vs reference.

The kernel is the hot inner loop of every Pieri product and hence of all
ring evaluation and verification sweeps (the product layer caches per
class, so this measures the raw uncached enumeration cost).

Usage: python benchmarks/bench_pieri.py [--repeat N]
"""

import argparse
import time

from isoschub._pierikernel import reference
from isoschub.partitions import enumerate_p

try:
    from isoschub._pierikernel import _speedups
except ImportError:
    _speedups = None


def workloads():
    """Representative sweeps: bounded grid products and stable products."""
    bounded = []
    for k, n in ((1, 3), (2, 4), (2, 5), (3, 6)):
        for lam in enumerate_p(k, n):
            for p in range(1, n + k + 1):
                bounded.append((lam, p, k, n - k, n + k))
    stable = []
    for k in (0, 1, 2, 3):
        for lam in enumerate_p(k, k + 3):
            for p in range(1, 10):
                stable.append((lam, p, k, -1, -1))
    return [("bounded grid", bounded), ("stable ring", stable)]


def run(fn, calls, repeat):
    best = float("inf")
    targets = 0
    for _ in range(repeat):
        start = time.perf_counter()
        targets = 0
        for lam, p, k, rb, cb in calls:
            targets += len(fn(lam, p, k, rb, cb))
        best = min(best, time.perf_counter() - start)
    return best, targets


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"{'workload':<14} {'calls':>7} {'targets':>8} "
          f"{'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, calls in workloads():
        py_time, targets = run(reference.pieri_targets, calls, args.repeat)
        if _speedups is not None:
            c_time, c_targets = run(_speedups.pieri_targets, calls, args.repeat)
            assert c_targets == targets
            print(f"{name:<14} {len(calls):>7} {targets:>8} "
                  f"{py_time:>9.3f}s {c_time:>9.3f}s {py_time / c_time:>7.1f}x")
        else:
            print(f"{name:<14} {len(calls):>7} {targets:>8} "
                  f"{py_time:>9.3f}s {'n/a':>10} {'n/a':>8}")


if __name__ == "__main__":
    main()
