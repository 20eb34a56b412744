#!/usr/bin/env python3
"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N] [--threshold N]

The walk runs the K3 window at chi = 2 (the largest one behind the lambda
bound), split by first entry type exactly as the search does. The grid
minimization covers every (b, u, denominator order) of the bielliptic and
abelian searches.
"""
import argparse
import time
from fractions import Fraction

from iitaka import kernels
from iitaka.enumeration import SearchWindow, entry_types
from iitaka.moduli import DENOM_ORDER, U_RANGE


def walk_inputs(threshold):
    window = SearchWindow.for_fiber("k3", threshold, "closed", [2])
    upper = window.upper(2)
    types = entry_types(upper)
    rs = [r for r, _ in types]
    bs = [b for _, b in types]
    ws = [r - 1.0 / r for r in rs]
    return [(rs, bs, ws, 2, 48.0, float(upper), first) for first in range(len(types))]


def run_walk(impl, tasks):
    nodes = hits = survivors = 0
    for t in tasks:
        s, n, h = impl.walk_baskets(*t)
        nodes += n
        hits += h
        survivors += len(s)
    return nodes, hits, survivors


def run_grid(impl):
    out = []
    for b in (1, 4, 6):
        for u in U_RANGE:
            for denoms in DENOM_ORDER:
                out.append(impl.dega_min_grid(b, u, *denoms))
    return out


def best_of(fn, repeat):
    times, value = [], None
    for _ in range(repeat):
        t = time.perf_counter()
        value = fn()
        times.append(time.perf_counter() - t)
    return min(times), value


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--threshold", default="42", help="lambda threshold for the walk")
    args = ap.parse_args()

    impls = kernels.backends()
    tasks = walk_inputs(Fraction(args.threshold))
    print(f"selected backend: {kernels.BACKEND}")
    rows = {}
    for name, impl in sorted(impls.items()):
        # the Python walk is slow; one run is enough to time it
        reps = 1 if name == "python" else args.repeat
        tw, walk = best_of(lambda: run_walk(impl, tasks), reps)
        tg, grid = best_of(lambda: run_grid(impl), args.repeat)
        rows[name] = (tw, tg, walk, grid)
        print(f"{name:9s} walk {tw:8.3f}s  nodes={walk[0]} hits={walk[1]} "
              f"survivors={walk[2]}   grid {tg * 1000:8.2f}ms")
    if len(rows) == 2:
        c, p = rows["compiled"], rows["python"]
        assert c[2] == p[2] and c[3] == p[3], "backends disagree"
        print(f"speedup   walk {p[0] / c[0]:8.1f}x             grid {p[1] / c[1]:8.1f}x")


if __name__ == "__main__":
    main()
