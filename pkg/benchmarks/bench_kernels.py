"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat R] [--json]

Every workload runs on both backends with identical inputs; results are
checked for equality before timings are reported.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import statistics
import time

from rtcycles import _pykernels
from rtcycles.graphcore import Graph

try:
    from rtcycles import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_rows(rng: random.Random, n: int, p: float) -> list[int]:
    adj = [0] * n
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def colex(g: Graph):
    edges = sorted(g.edges(), key=lambda e: (e[1], e[0]))
    return [u for u, _ in edges], [v for _, v in edges]


def workloads():
    rng = random.Random(1)
    graphs = [random_rows(rng, rng.randint(8, 14), rng.uniform(0.2, 0.6)) for _ in range(60)]

    def spectra(k):
        return [tuple(k.find_cycle(adj, length, 10**9)[:3])
                for adj in graphs for length in range(3, len(adj) + 1)]

    def long_cycles(k):
        return [k.find_long_cycle(adj, len(adj) - 2, 10**9) for adj in graphs]

    def paths(k):
        return [k.find_path(adj, len(adj), 10**9) for adj in graphs]

    pairs = []
    for adj in graphs:
        n = len(adj)
        u, v = rng.sample(range(n), 2)
        row = list(adj)
        row[u] &= ~(1 << v)
        row[v] &= ~(1 << u)
        pairs.append((row, u, v, sum(1 << k for k in range(3, n + 1))))

    def closing(k):
        return [k.closed_lengths(row, u, v, mask) for row, u, v, mask in pairs]

    us6, vs6 = colex(Graph.complete(6))
    us7, vs7 = colex(Graph.complete(7))

    def tree_k6_unpruned(k):
        return k.coloring_tree(6, us6, vs6, (1 << 4) | (1 << 5), False, False, 10**12, [], -1, True)

    def tree_k7_pruned(k):
        return k.coloring_tree(7, us7, vs7, 1 << 4, False, True, 10**12, [], -1)

    return [
        ("cycle search, all lengths (60 graphs, n 8-14)", spectra),
        ("long cycle >= n-2", long_cycles),
        ("Hamilton path", paths),
        ("closed lengths of a new edge", closing),
        ("coloring tree K6, unpruned, full sweep of 2^15", tree_k6_unpruned),
        ("coloring tree K7, pruned, k = 4", tree_k7_pruned),
    ]


def timed(fn, kernels, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(kernels)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print machine-readable results")
    args = ap.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled extension not built; run `python3 setup.py build_ext --inplace`")
    rows = []
    for name, fn in workloads():
        tc, rc = timed(fn, _ckernels, args.repeat)
        tp, rp = timed(fn, _pykernels, args.repeat)
        if rc != rp:
            raise SystemExit(f"backends disagree on {name!r}")
        rows.append({"workload": name, "cython_s": tc, "python_s": tp, "speedup": tp / tc})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    width = max(len(r["workload"]) for r in rows)
    print(f"{'workload':<{width}}  {'cython':>10}  {'python':>10}  {'speedup':>8}")
    for r in rows:
        print(f"{r['workload']:<{width}}  {r['cython_s']:>9.4f}s  {r['python_s']:>9.4f}s"
              f"  {r['speedup']:>7.1f}x")


if __name__ == "__main__":
    main()
