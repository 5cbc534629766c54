#!/usr/bin/env python3
"""Compare the compiled and pure-Python shortest-path kernels.

Builds one random temporal graph, expands it once, then times repeated
single-source runs over the same node set with each kernel. The work is
identical, so the wall-clock ratio is the kernel speedup. Results from the
two kernels are cross-checked before timing starts.
"""

import argparse
import random
import time

import numpy as np

from tempoc import transform
from tempoc._kernel import ACTIVE_BACKEND, COMPILED_KERNEL, PYTHON_KERNEL
from tempoc.graph import TemporalGraph


def random_graph(rng: random.Random, n: int, snapshots: int, density: float) -> TemporalGraph:
    edges = [
        (u, v, t)
        for t in range(snapshots)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < density
    ]
    if not edges:
        raise SystemExit("no edges generated; raise --density")
    return TemporalGraph.from_edges(edges, vertices=range(n))


def run_all(kernel, tg, sources, dist, pred) -> None:
    for src in sources:
        kernel(tg.indptr, tg.targets, tg.weights, src, dist, pred)


def bench(kernel, tg, sources, runs: int) -> float:
    dist = np.empty(tg.n_nodes, dtype=np.float64)
    pred = np.empty(tg.n_nodes, dtype=np.int32)
    run_all(kernel, tg, sources, dist, pred)  # warm-up
    best = float("inf")
    for _ in range(runs):
        t0 = time.perf_counter()
        run_all(kernel, tg, sources, dist, pred)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vertices", type=int, default=120)
    ap.add_argument("--snapshots", type=int, default=12)
    ap.add_argument("--density", type=float, default=0.08)
    ap.add_argument("--query-size", type=int, default=16,
                    help="number of source/sink dummies, one SSSP per source")
    ap.add_argument("--runs", type=int, default=5, help="timed repetitions, best kept")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--alpha", type=float, default=0.5)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    g = random_graph(rng, args.vertices, args.snapshots, args.density)
    q = sorted(rng.sample(sorted(g.vertices), min(args.query_size, len(g.vertices))))
    tg = transform.build(g, args.alpha, sources=q, sinks=q)
    sources = [tg.index_of(transform.source(v)) for v in q]

    print(f"graph: |V|={args.vertices} snapshots={args.snapshots} "
          f"edges={g.edge_count} expanded nodes={tg.n_nodes} arcs={tg.n_arcs}")
    print(f"work per pass: {len(sources)} SSSP runs; active backend: {ACTIVE_BACKEND}")

    kernels = [("python", PYTHON_KERNEL)]
    if COMPILED_KERNEL is not None:
        kernels.append(("compiled", COMPILED_KERNEL))
    else:
        print("compiled kernel not built; timing the pure-Python kernel only")

    # agreement check before timing
    ref = None
    for name, kernel in kernels:
        dist = np.empty(tg.n_nodes, dtype=np.float64)
        pred = np.empty(tg.n_nodes, dtype=np.int32)
        kernel(tg.indptr, tg.targets, tg.weights, sources[0], dist, pred)
        if ref is None:
            ref = (dist.copy(), pred.copy())
        else:
            assert np.array_equal(ref[0], dist) and np.array_equal(ref[1], pred), (
                "kernels disagree"
            )

    times = {}
    for name, kernel in kernels:
        times[name] = bench(kernel, tg, sources, args.runs)

    print(f"\n{'backend':<10} {'best wall':>12} {'SSSP/s':>10}")
    for name, t in times.items():
        print(f"{name:<10} {t:>11.4f}s {len(sources) / t:>10.1f}")
    if "compiled" in times:
        print(f"\nspeedup: {times['python'] / times['compiled']:.1f}x "
              f"(python / compiled)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
