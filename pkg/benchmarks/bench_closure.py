#!/usr/bin/env python3
"""Benchmark the compiled closure kernel against the pure-Python fallback.

Two workloads:
  * one large cascade (full percolating construction on a 200x200 torus), and
  * oracle-style bursts of small cascades (random seed subsets on the 3x3
    torus at threshold 3), which is where the brute-force search lives.

Usage: python benchmarks/bench_closure.py [--subsets N]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from bondperc import _closure_py
from bondperc.constructions import build_torus_set
from bondperc.graphs import make_torus
from bondperc.percolation import _bond_csr

try:
    from bondperc import _closure as _compiled
except ImportError:
    _compiled = None


def run_once(kernel, graph, seeds_list, r) -> float:
    ptr, eidx, eu, ev = _bond_csr(graph)
    start = time.perf_counter()
    for seeds in seeds_list:
        kernel.bond_gens(graph.n, graph.num_edges, ptr, eidx, eu, ev, seeds, r)
    return time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--subsets", type=int, default=20_000,
                        help="number of small cascades in the burst workload")
    args = parser.parse_args()

    kernels = [("python", _closure_py)]
    if _compiled is not None:
        kernels.append(("compiled", _compiled))
    else:
        print("compiled kernel not built; benchmarking the fallback only")

    big = make_torus([200, 200])
    big_seed = np.asarray(sorted(build_torus_set([200, 200], 2)), dtype=np.int32)
    small = make_torus([3, 3])
    rng = random.Random(0)
    bursts = [
        np.asarray(sorted(rng.sample(range(18), 10)), dtype=np.int32)
        for _ in range(args.subsets)
    ]

    print(f"{'workload':<34}" + "".join(f"{name:>12}" for name, _ in kernels))
    rows = [
        ("200x200 torus, one cascade", lambda k: run_once(k, big, [big_seed], 2)),
        (f"3x3 torus, {args.subsets} cascades", lambda k: run_once(k, small, bursts, 3)),
    ]
    timings: dict[str, list[float]] = {name: [] for name, _ in kernels}
    for label, bench in rows:
        line = f"{label:<34}"
        for name, kernel in kernels:
            t = bench(kernel)
            timings[name].append(t)
            line += f"{t:>11.3f}s"
        print(line)
    if _compiled is not None:
        speedups = [p / c for p, c in zip(timings["python"], timings["compiled"])]
        print(f"{'speedup (python / compiled)':<34}"
              + "".join(f"{s:>11.1f}x" for s in speedups))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
