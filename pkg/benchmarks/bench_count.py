#!/usr/bin/env python3
"""Benchmark the pure-Python and compiled counting kernels on the same
workloads: hypersurface zero counts and intersection counts at the largest
primes the acceptance checks touch.

Run:  python benchmarks/bench_count.py
"""

import time

from pottsmotive import _countpure
from pottsmotive.multigraph import banana, polygon
from pottsmotive.pointcount import _dense_system
from pottsmotive.tutte import tutte_delcon

try:
    from pottsmotive import _countcore
except ImportError:
    _countcore = None


def workloads():
    pentagon = tutte_delcon(polygon(5))
    five_banana = tutte_delcon(banana(5))
    tri = polygon(3)
    tri_pair = [
        tutte_delcon(tri.delete_edge("3")),
        tutte_delcon(tri.contract_edge("3")),
    ]
    yield "pentagon zeros, p=17", [pentagon], 17
    yield "pentagon zeros, p=19", [pentagon], 19
    yield "5-banana zeros, p=19", [five_banana], 19
    yield "triangle del/con intersection, p=13", tri_pair, 13


def run(kernel, polys, prime, repeats=5):
    names, dense = _dense_system(polys)
    best = float("inf")
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        value = kernel.count_common_zeros(dense, len(names), prime)
        best = min(best, time.perf_counter() - start)
    return value, best


def main():
    kernels = [("pure", _countpure)]
    if _countcore is not None:
        kernels.append(("compiled", _countcore))
    else:
        print("compiled kernel not built; timing the pure kernel only")
    print(f"{'workload':<40} " + " ".join(f"{name:>12}" for name, _ in kernels) + "  speedup")
    for label, polys, prime in workloads():
        times = []
        counts = set()
        for _, kernel in kernels:
            value, best = run(kernel, polys, prime)
            counts.add(value)
            times.append(best)
        assert len(counts) == 1, f"kernels disagree on {label}: {counts}"
        cells = " ".join(f"{t * 1000:>10.2f}ms" for t in times)
        speedup = f"{times[0] / times[-1]:>7.1f}x" if len(times) > 1 else ""
        print(f"{label:<40} {cells}  {speedup}")


if __name__ == "__main__":
    main()
