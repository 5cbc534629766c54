"""Directed Steiner connectors in the transformed graph.

Per query root r, a minimum directed Steiner tree is approximated from
Source(r) to the sink dummies of the other query vertices. At depth 1 the
tree is the union of the root's shortest-path witnesses to each reachable
terminal (union of one predecessor tree's branches, hence itself a tree).
Deeper levels run a density-greedy recursion over lazily materialized
metric-closure rows: repeatedly commit the candidate subtree minimizing
cost per newly covered terminal, where candidates are direct paths, stars
through an intermediate row node, or deeper chains through one.

Terminals that stay uncovered flag the tree cost as +inf; `covered` then
holds the best coverage achieved and `arc_cost` the weight actually built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from . import transform
from ._kernel import sssp_csr
from ._parallel import map_ordered
from .errors import DataError
from .graph import TemporalGraph
from .sfp import _run
from .transform import KIND_REPLICA, Node, TransformedGraph


@dataclass
class MetricClosure:
    """Per-node shortest-path rows (distances + predecessor trees), keyed by
    node index and computed on demand."""

    tg: TransformedGraph
    _rows: dict[int, tuple[np.ndarray, np.ndarray]] = field(default_factory=dict)

    @property
    def row_count(self) -> int:
        return len(self._rows)

    def row_indices(self) -> list[int]:
        return sorted(self._rows)

    def replica_row_indices(self) -> list[int]:
        return [i for i in sorted(self._rows) if self.tg.ref_of(i).kind == KIND_REPLICA]

    def ensure_row(self, idx: int) -> None:
        if idx not in self._rows:
            self._rows[idx] = _run(self.tg, idx)

    def dist_idx(self, a: int, b: int) -> float:
        return float(self._rows[a][0][b])

    def witness_idx(self, a: int, b: int) -> list[int] | None:
        """Index path a -> b along a's predecessor tree, None if unreachable."""
        dist, pred = self._rows[a]
        if math.isinf(dist[b]):
            return None
        rev = [b]
        while rev[-1] != a:
            p = int(pred[rev[-1]])
            if p < 0:
                return None
            rev.append(p)
        return rev[::-1]

    def dist(self, a: Node, b: Node) -> float:
        return self.dist_idx(self.tg.index_of(a), self.tg.index_of(b))

    def witness(self, a: Node, b: Node) -> list[Node] | None:
        path = self.witness_idx(self.tg.index_of(a), self.tg.index_of(b))
        if path is None:
            return None
        return [self.tg.ref_of(i) for i in path]


def lazy_closure(
    tg: TransformedGraph,
    roots: Iterable[Node],
    depth: int = 1,
    threads: int = 1,
) -> MetricClosure:
    """Closure rows for the roots; each depth level past 1 adds rows for the
    replica nodes reachable from the rows already present."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    closure = MetricClosure(tg=tg)
    pending = sorted({tg.index_of(r) for r in roots})
    for _ in range(depth):
        new_rows = map_ordered(lambda i: _run(tg, i), pending, threads)
        for idx, row in zip(pending, new_rows):
            closure._rows[idx] = row
        reachable: set[int] = set()
        for dist, _ in closure._rows.values():
            reachable.update(int(i) for i in np.flatnonzero(np.isfinite(dist)))
        pending = sorted(
            i
            for i in reachable
            if i not in closure._rows and tg.ref_of(i).kind == KIND_REPLICA
        )
        if not pending:
            break
    return closure


@dataclass(frozen=True)
class SteinerTree:
    root: Node
    arcs: frozenset[tuple[Node, Node]]
    covered: frozenset[Node]
    cost: float  # +inf when some requested terminal is uncovered
    arc_cost: float  # weight of the arcs actually present

    def vertices(self) -> frozenset[int]:
        out = set()
        for a, b in self.arcs:
            for nd in (a, b):
                if nd.kind == KIND_REPLICA:
                    out.add(nd.vertex)
        return frozenset(out)


def _candidates(
    closure: MetricClosure, v: int, uncovered: tuple[int, ...], level: int
) -> Iterator[tuple[float, frozenset[int], list[list[int]]]]:
    """Candidate subtrees rooted at row node v: (cost, covered, index paths)."""
    for t in uncovered:
        d = closure.dist_idx(v, t)
        if math.isfinite(d):
            yield (d, frozenset((t,)), [closure.witness_idx(v, t)])
    if level < 2:
        return
    for w in closure.replica_row_indices():
        if w == v:
            continue
        base = closure.dist_idx(v, w)
        if not math.isfinite(base):
            continue
        base_path = closure.witness_idx(v, w)
        # stars: w fans out directly to the k nearest uncovered terminals
        reach = sorted(
            (closure.dist_idx(w, t), t)
            for t in uncovered
            if math.isfinite(closure.dist_idx(w, t))
        )
        cum = base
        cov: list[int] = []
        paths = [base_path]
        for dwt, t in reach:
            cum += dwt
            cov.append(t)
            paths = paths + [closure.witness_idx(w, t)]
            yield (cum, frozenset(cov), list(paths))
        if level > 2:
            for c_sub, cov_sub, p_sub in _candidates(closure, w, uncovered, level - 1):
                yield (base + c_sub, cov_sub, [base_path] + p_sub)


def _greedy_paths(
    closure: MetricClosure, root: int, terminals: list[int], depth: int
) -> list[list[int]]:
    uncovered = set(terminals)
    chosen: list[list[int]] = []
    while uncovered:
        best = None
        for cost, cov, paths in _candidates(
            closure, root, tuple(sorted(uncovered)), depth
        ):
            key = (
                cost / len(cov),
                -len(cov),
                tuple(sorted(cov)),
                tuple(tuple(p) for p in paths),
            )
            if best is None or key < best[0]:
                best = (key, cov, paths)
        chosen.extend(best[2])
        uncovered -= best[1]
    return chosen


def _restrict_to_tree(
    tg: TransformedGraph, root: int, paths: list[list[int]], covered: list[int]
) -> tuple[frozenset[tuple[int, int]], float]:
    """Re-runs a shortest-path pass over just the candidate arcs so overlapping
    witness paths collapse into a single arborescence."""
    arc_set = sorted(
        {(a, b) for p in paths for a, b in zip(p, p[1:])}
    )
    if not arc_set:
        return frozenset(), 0.0
    n = tg.n_nodes
    indptr = np.zeros(n + 1, dtype=np.int64)
    targets = np.empty(len(arc_set), dtype=np.int32)
    weights = np.empty(len(arc_set), dtype=np.float64)
    for k, (a, b) in enumerate(arc_set):
        indptr[a + 1] += 1
        targets[k] = b
        weights[k] = tg.arc_weight(a, b)
    np.cumsum(indptr, out=indptr)
    dist = np.empty(n, dtype=np.float64)
    pred = np.empty(n, dtype=np.int32)
    sssp_csr(indptr, targets, weights, root, dist, pred)
    arcs: set[tuple[int, int]] = set()
    for t in covered:
        j = t
        while j != root:
            p = int(pred[j])
            arcs.add((p, j))
            j = p
    cost = sum(tg.arc_weight(a, b) for a, b in arcs)
    return frozenset(arcs), cost


def min_dst(
    closure: MetricClosure, root: Node, terminals: Iterable[Node], depth: int = 1
) -> SteinerTree:
    """Approximate minimum directed Steiner tree from root to the terminals."""
    tg = closure.tg
    term_idx = sorted({tg.index_of(t) for t in terminals})
    if not term_idx:
        raise DataError("min_dst needs at least one terminal")
    root_idx = tg.index_of(root)
    closure.ensure_row(root_idx)
    reachable = [t for t in term_idx if math.isfinite(closure.dist_idx(root_idx, t))]
    if depth <= 1:
        paths = [closure.witness_idx(root_idx, t) for t in reachable]
    else:
        paths = _greedy_paths(closure, root_idx, reachable, depth)
    arcs_idx, arc_cost = _restrict_to_tree(tg, root_idx, paths, reachable)
    full = len(reachable) == len(term_idx)
    return SteinerTree(
        root=root,
        arcs=frozenset(
            (tg.ref_of(a), tg.ref_of(b)) for a, b in sorted(arcs_idx)
        ),
        covered=frozenset(tg.ref_of(t) for t in reachable),
        cost=arc_cost if full else math.inf,
        arc_cost=arc_cost,
    )


@dataclass(frozen=True)
class Connector:
    vertices: frozenset[int]
    trees_used: tuple[SteinerTree, ...]
    fully_connected: bool


def build_connector(
    g: TemporalGraph,
    alpha: float,
    q: Iterable[int],
    depth: int = 1,
    threads: int = 1,
    rng=None,
) -> Connector:
    """Initial connector around the query set.

    Builds one Steiner tree per query root and keeps the cheapest; if no root
    reaches every other query vertex, trees of the still-disconnected query
    vertices are merged in until none remain (picked by smallest id, or by
    `rng.choice` when a seeded random.Random is supplied).
    """
    qs = sorted(set(q))
    missing = [v for v in qs if v not in g.vertices]
    if missing:
        raise DataError(f"query vertices not in graph: {missing}")
    if not qs:
        raise DataError("query set must be nonempty")
    if len(qs) == 1:
        return Connector(frozenset(qs), (), True)

    tg = transform.build(g, alpha, sources=qs, sinks=qs)
    closure = lazy_closure(
        tg, [transform.source(v) for v in qs], depth=depth, threads=threads
    )

    def tree_for(r: int) -> SteinerTree:
        return min_dst(
            closure,
            transform.source(r),
            [transform.sink(u) for u in qs if u != r],
            depth=depth,
        )

    trees = map_ordered(tree_for, qs, threads)
    by_root = dict(zip(qs, trees))
    r_star = min(qs, key=lambda r: (by_root[r].cost, r))
    used = [by_root[r_star]]
    s = set(used[0].vertices()) | set(qs)
    fully = math.isfinite(used[0].cost)
    if not fully:
        covered_v = {nd.vertex for nd in used[0].covered}
        qbar = {u for u in qs if u != r_star and u not in covered_v}
        while qbar:
            pick = rng.choice(sorted(qbar)) if rng is not None else min(qbar)
            tv = by_root[pick]
            used.append(tv)
            s |= tv.vertices()
            qbar -= {pick} | {nd.vertex for nd in tv.covered}
    return Connector(frozenset(s), tuple(used), fully)
