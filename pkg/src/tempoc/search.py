"""End-to-end extraction of a minimum temporal-inefficiency subgraph.

Pipeline: project the graph onto the window, build a Steiner connector
around the query set, then greedily peel non-query vertices. Peeling removes
the vertex whose removal drops the inefficiency most (ties to the smallest
id), records every intermediate set, and returns the best one seen; later
sets win value ties so the result is as small as possible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._parallel import map_ordered
from .errors import DataError
from .graph import TemporalGraph, Window, induce, project
from .inefficiency import inefficiency, pair_contribution
from .sfp import all_pairs
from .steiner import build_connector

TraceEntry = tuple[int | None, float]  # (removed vertex, value after removal)


@dataclass(frozen=True)
class Solution:
    window: Window
    query: frozenset[int]
    vertices: frozenset[int]
    induced_edges: frozenset[tuple[int, int, int]]
    inefficiency: float
    disconnected_query: frozenset[int]
    trace: tuple[TraceEntry, ...] | None = None


def _finalize(
    g: TemporalGraph,
    alpha: float,
    q: frozenset[int],
    best: frozenset[int],
    trace: tuple[TraceEntry, ...] | None,
    threads: int,
) -> Solution:
    m = all_pairs(g, alpha, best, threads=threads)
    vs = m.vertices
    finite = np.isfinite(m.values)
    np.fill_diagonal(finite, False)
    disconnected = frozenset(
        v
        for i, v in enumerate(vs)
        if v in q and not (finite[i, :].any() or finite[:, i].any())
    )
    total = 0.0
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            total += pair_contribution(
                float(m.values[i, j]), float(m.values[j, i]), alpha
            )
    return Solution(
        window=g.window,
        query=q,
        vertices=best,
        induced_edges=frozenset(induce(g, best).iter_edges()),
        inefficiency=total,
        disconnected_query=disconnected,
        trace=trace,
    )


def greedy_peel(
    g: TemporalGraph,
    alpha: float,
    q,
    s0,
    threads: int = 1,
    keep_trace: bool = False,
) -> Solution:
    """Peel s0 down around q over g's span (g is already the window graph)."""
    qset = frozenset(q)
    current = set(s0)
    if not qset <= current:
        raise DataError(f"query not inside start set: {sorted(qset - current)}")

    value = inefficiency(g, alpha, current, threads=threads).total
    trace: list[TraceEntry] = [(None, value)]
    best_set, best_value = frozenset(current), value
    while True:
        candidates = sorted(current - qset)
        if not candidates:
            break
        vals = map_ordered(
            lambda v: inefficiency(g, alpha, current - {v}, threads=1).total,
            candidates,
            threads,
        )
        # max removal gain == min value after removal; first index wins ties,
        # which is the smallest id since candidates are sorted
        pick = min(range(len(candidates)), key=lambda i: vals[i])
        current.remove(candidates[pick])
        value = vals[pick]
        trace.append((candidates[pick], value))
        if value <= best_value:  # later set wins ties: strictly smaller
            best_set, best_value = frozenset(current), value
    return _finalize(
        g, alpha, qset, best_set, tuple(trace) if keep_trace else None, threads
    )


def solve(
    g: TemporalGraph,
    w: Window,
    alpha: float,
    q,
    depth: int = 1,
    threads: int = 1,
    keep_trace: bool = False,
    rng=None,
) -> Solution:
    """Extract the subgraph for query set q within window w."""
    qset = frozenset(q)
    if not qset:
        raise DataError("query set must be nonempty")
    missing = sorted(qset - g.vertices)
    if missing:
        raise DataError(f"query vertices not in graph: {missing}")
    wg = project(g, w)
    connector = build_connector(wg, alpha, qset, depth=depth, threads=threads, rng=rng)
    return greedy_peel(
        wg, alpha, qset, connector.vertices, threads=threads, keep_trace=keep_trace
    )
