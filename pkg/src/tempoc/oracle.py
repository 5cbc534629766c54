"""Brute-force reference implementations for tests.

Everything here recomputes results from first principles and shares no
shortest-path code with the production modules: path costs come from
exhaustive DFS over time-respecting edge sequences, Steiner trees from a
Floyd-Warshall metric closure plus a subset DP. Hard size guards keep the
exponential blowup in check; these functions are for desk-scale validation
only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import DataError
from .graph import TemporalGraph, Window
from .transform import Node, TransformedGraph

MAX_ENUM_VERTICES = 8
MAX_ENUM_SNAPSHOTS = 4
MAX_EXACT_VERTICES = 10
MAX_DST_TERMINALS = 6
MAX_DST_NODES = 400


@dataclass(frozen=True)
class PathEnumeration:
    """All time-respecting paths u -> v with their costs."""

    paths: tuple[tuple[tuple[tuple[int, int, int], ...], float], ...]
    min_cost: float


def _window_adj(
    g: TemporalGraph, w: Window, restrict: frozenset[int] | None
) -> tuple[list[int], dict[int, dict[int, list[int]]]]:
    lo = max(w.start, g.t_min)
    hi = min(w.end, g.t_max)
    if lo > hi:
        raise DataError("window does not intersect the loaded span")
    times = list(range(lo, hi + 1))
    adj: dict[int, dict[int, list[int]]] = {}
    for t in times:
        layer: dict[int, list[int]] = {}
        for u, v in sorted(g.snapshots[t]):
            if restrict is not None and (u not in restrict or v not in restrict):
                continue
            layer.setdefault(u, []).append(v)
            layer.setdefault(v, []).append(u)
        adj[t] = layer
    return times, adj


def enumerate_paths(
    g: TemporalGraph,
    w: Window,
    u: int,
    v: int,
    alpha: float,
    restrict: Iterable[int] | None = None,
    max_vertices: int = MAX_ENUM_VERTICES,
) -> PathEnumeration:
    """Exhaustive DFS over time-respecting edge sequences from u to v.

    A path may not revisit a (vertex, timestamp) pair, which discards only
    dominated continuations, so the minimum cost is exact.
    """
    rset = frozenset(restrict) if restrict is not None else None
    effective = rset if rset is not None else g.vertices
    if len(effective) > max_vertices:
        raise DataError(f"oracle guard: {len(effective)} vertices > {max_vertices}")
    times, adj = _window_adj(g, w, rset)
    if len(times) > MAX_ENUM_SNAPSHOTS:
        raise DataError(f"oracle guard: {len(times)} snapshots > {MAX_ENUM_SNAPSHOTS}")

    found: list[tuple[tuple[tuple[int, int, int], ...], float]] = []
    if u == v:
        found.append(((), 0.0))

    # stack entries: (vertex, earliest next move time, start time, edges so far, visited pairs)
    stack: list[tuple[int, int | None, int | None, tuple, frozenset]] = [
        (u, None, None, (), frozenset())
    ]
    while stack:
        cur, last_t, t0, edges, visited = stack.pop()
        for t in times:
            if last_t is not None and t < last_t:
                continue
            for nbr in adj[t].get(cur, ()):
                if (nbr, t) in visited:
                    continue
                ne = edges + ((cur, nbr, t),)
                nt0 = t if t0 is None else t0
                if nbr == v:
                    cost = alpha * len(ne) + (1 - alpha) * (t - nt0)
                    found.append((ne, cost))
                stack.append(
                    (nbr, t, nt0, ne, visited | {(cur, t), (nbr, t)})
                )
    min_cost = min((c for _, c in found), default=math.inf)
    return PathEnumeration(paths=tuple(found), min_cost=min_cost)


def min_cost(
    g: TemporalGraph,
    w: Window,
    u: int,
    v: int,
    alpha: float,
    restrict: Iterable[int] | None = None,
    max_vertices: int = MAX_ENUM_VERTICES,
) -> float:
    return enumerate_paths(g, w, u, v, alpha, restrict, max_vertices).min_cost


def exact_inefficiency(
    g: TemporalGraph, w: Window, alpha: float, s: Iterable[int]
) -> float:
    """Definition evaluated literally on the subgraph induced by s."""
    sset = sorted(set(s))
    if not sset:
        raise DataError("oracle needs a nonempty vertex set")
    if len(sset) > MAX_EXACT_VERTICES:
        raise DataError(f"oracle guard: {len(sset)} vertices > {MAX_EXACT_VERTICES}")
    stray = set(sset) - g.vertices
    if stray:
        raise DataError(f"vertices not in graph: {sorted(stray)}")
    total = 0.0
    for u, v in combinations(sset, 2):
        for d in (
            min_cost(g, w, u, v, alpha, restrict=sset, max_vertices=MAX_EXACT_VERTICES),
            min_cost(g, w, v, u, alpha, restrict=sset, max_vertices=MAX_EXACT_VERTICES),
        ):
            if math.isinf(d):
                total += 0.5
            elif d > 0.0:
                total += (1.0 - alpha / d) / 2.0
    return total


def exact_mtis(
    g: TemporalGraph, w: Window, alpha: float, q: Iterable[int]
) -> tuple[frozenset[int], float]:
    """Exhaustive search over all S with q <= S <= V; ties break to the
    lexicographically smallest sorted vertex tuple."""
    qset = frozenset(q)
    if not qset:
        raise DataError("query set must be nonempty")
    if len(g.vertices) > MAX_EXACT_VERTICES:
        raise DataError(
            f"oracle guard: {len(g.vertices)} vertices > {MAX_EXACT_VERTICES}"
        )
    others = sorted(g.vertices - qset)
    best: tuple[float, tuple[int, ...]] | None = None
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            s = tuple(sorted(qset | set(extra)))
            val = exact_inefficiency(g, w, alpha, s)
            key = (val, s)
            if best is None or key < best:
                best = key
    return frozenset(best[1]), best[0]


@dataclass(frozen=True)
class DstResult:
    arcs: frozenset[tuple[Node, Node]]
    covered: frozenset[Node]
    cost: float  # +inf when some terminal is unreachable
    finite_cost: float  # cost of the tree over the reachable terminals


def exact_dst(
    tg: TransformedGraph, root: Node, terminals: Iterable[Node]
) -> DstResult:
    """Optimal directed Steiner tree via Floyd-Warshall closure + subset DP."""
    term_nodes = sorted(set(terminals), key=tg.index_of)
    if not term_nodes:
        raise DataError("exact_dst needs at least one terminal")
    if len(term_nodes) > MAX_DST_TERMINALS:
        raise DataError(f"oracle guard: {len(term_nodes)} terminals > {MAX_DST_TERMINALS}")
    n = tg.n_nodes
    if n > MAX_DST_NODES:
        raise DataError(f"oracle guard: {n} nodes > {MAX_DST_NODES}")

    inf = math.inf
    dist = [[inf] * n for _ in range(n)]
    nxt = [[-1] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = 0.0
    for i in range(n):
        for k in range(int(tg.indptr[i]), int(tg.indptr[i + 1])):
            j = int(tg.targets[k])
            w = float(tg.weights[k])
            if w < dist[i][j]:
                dist[i][j] = w
                nxt[i][j] = j
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if math.isinf(dik):
                continue
            di = dist[i]
            ni = nxt[i]
            for j in range(n):
                nd = dik + dk[j]
                if nd < di[j]:
                    di[j] = nd
                    ni[j] = nxt[i][k]

    def walk(i: int, j: int) -> set[tuple[int, int]]:
        arcs: set[tuple[int, int]] = set()
        while i != j:
            k = nxt[i][j]
            arcs.add((i, k))
            i = k
        return arcs

    r = tg.index_of(root)
    terms = [tg.index_of(t) for t in term_nodes]
    reach = [t for t in terms if not math.isinf(dist[r][t])]
    if not reach:
        return DstResult(frozenset(), frozenset(), inf, 0.0)
    kk = len(reach)
    full = (1 << kk) - 1
    dp = [[inf] * n for _ in range(full + 1)]
    split_of: list[list[int]] = [[-1] * n for _ in range(full + 1)]
    move_of: list[list[int]] = [[-1] * n for _ in range(full + 1)]
    for b, t in enumerate(reach):
        row = dp[1 << b]
        for v in range(n):
            row[v] = dist[v][t]
    masks = sorted(range(1, full + 1), key=lambda m: bin(m).count("1"))
    for mask in masks:
        if mask.bit_count() <= 1:
            continue
        base = [inf] * n
        base_split = [-1] * n
        sub = (mask - 1) & mask
        while sub:
            other = mask ^ sub
            row_s, row_o = dp[sub], dp[other]
            for v in range(n):
                c = row_s[v] + row_o[v]
                if c < base[v]:
                    base[v] = c
                    base_split[v] = sub
            sub = (sub - 1) & mask
        row = dp[mask]
        for v in range(n):
            best, best_w = base[v], v
            dv = dist[v]
            for wnode in range(n):
                if base[wnode] == inf:
                    continue
                c = dv[wnode] + base[wnode]
                if c < best:
                    best, best_w = c, wnode
            row[v] = best
            split_of[mask][v] = base_split[best_w]
            move_of[mask][v] = best_w

    def expand(mask: int, v: int) -> set[tuple[int, int]]:
        if mask.bit_count() == 1:
            b = mask.bit_length() - 1
            return walk(v, reach[b])
        w = move_of[mask][v]
        arcs = walk(v, w) if w != v else set()
        sub = split_of[mask][v]
        return arcs | expand(sub, w) | expand(mask ^ sub, w)

    arcs_idx = expand(full, r)
    finite_cost = dp[full][r]
    covered = frozenset(tg.ref_of(t) for t in reach)
    cost = finite_cost if len(reach) == len(terms) else inf
    return DstResult(
        arcs=frozenset((tg.ref_of(a), tg.ref_of(b)) for a, b in sorted(arcs_idx)),
        covered=covered,
        cost=cost,
        finite_cost=finite_cost,
    )
