"""Shortest-fastest-path distances.

The distance from u to v in a temporal graph is the minimum over
time-respecting paths of alpha*hops + (1-alpha)*duration. It is computed as
a plain shortest path in the transformed graph, from u's source dummy to v's
sink dummy. Distances are asymmetric; unreachable means +inf; d(u, u) = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import transform
from ._kernel import sssp_csr
from ._parallel import map_ordered
from .errors import DataError
from .graph import TemporalGraph, induce
from .transform import Node, TransformedGraph


def _run(tg: TransformedGraph, src_idx: int) -> tuple[np.ndarray, np.ndarray]:
    dist = np.empty(tg.n_nodes, dtype=np.float64)
    pred = np.empty(tg.n_nodes, dtype=np.int32)
    sssp_csr(tg.indptr, tg.targets, tg.weights, src_idx, dist, pred)
    return dist, pred


@dataclass
class DistanceMap:
    """Single-source result: per-vertex distances to sink dummies plus the
    predecessor tree over transformed-graph nodes."""

    source: Node
    _tg: TransformedGraph = field(repr=False)
    _dist: np.ndarray = field(repr=False)
    _pred: np.ndarray = field(repr=False)

    @property
    def dist(self) -> dict[int, float]:
        return {
            v: float(self._dist[self._tg.index_of(transform.sink(v))])
            for v in self._tg.sinks
        }

    @property
    def pred(self) -> dict[Node, Node]:
        out = {}
        for i in range(self._tg.n_nodes):
            p = int(self._pred[i])
            if p >= 0:
                out[self._tg.ref_of(i)] = self._tg.ref_of(p)
        return out

    def node_dist(self, node: Node) -> float:
        return float(self._dist[self._tg.index_of(node)])

    def path_to(self, node: Node) -> list[Node] | None:
        """Node path from the source, or None if unreachable."""
        i = self._tg.index_of(node)
        if math.isinf(self._dist[i]):
            return None
        rev = [i]
        while rev[-1] != self._tg.index_of(self.source):
            p = int(self._pred[rev[-1]])
            if p < 0:
                return None
            rev.append(p)
        return [self._tg.ref_of(j) for j in reversed(rev)]


def sssp(tg: TransformedGraph, src: Node) -> DistanceMap:
    dist, pred = _run(tg, tg.index_of(src))
    return DistanceMap(source=src, _tg=tg, _dist=dist, _pred=pred)


def sfp_distance(g: TemporalGraph, alpha: float, u: int, v: int) -> float:
    """Distance from u to v over g's span."""
    for x in (u, v):
        if x not in g.vertices:
            raise DataError(f"vertex {x} not in graph")
    tg = transform.build(g, alpha, sources=(u,), sinks=(v,))
    dist, _ = _run(tg, tg.index_of(transform.source(u)))
    return float(dist[tg.index_of(transform.sink(v))])


@dataclass
class DistanceMatrix:
    """All-pairs distances over a sorted vertex tuple; values[i, j] is the
    distance from vertices[i] to vertices[j]."""

    vertices: tuple[int, ...]
    values: np.ndarray
    _pos: dict[int, int] = field(repr=False)

    def get(self, u: int, v: int) -> float:
        return float(self.values[self._pos[u], self._pos[v]])


def all_pairs(
    g: TemporalGraph, alpha: float, s: Iterable[int], threads: int = 1
) -> DistanceMatrix:
    """Pairwise distances inside the subgraph induced by s."""
    sub = induce(g, s)
    vs = tuple(sorted(sub.vertices))
    if not vs:
        raise DataError("all_pairs needs a nonempty vertex set")
    tg = transform.build(sub, alpha, sources=vs, sinks=vs)
    sink_idx = np.asarray(
        [tg.index_of(transform.sink(v)) for v in vs], dtype=np.int64
    )
    src_idx = [tg.index_of(transform.source(v)) for v in vs]

    def row(i: int) -> np.ndarray:
        dist, _ = _run(tg, src_idx[i])
        return dist[sink_idx]

    rows = map_ordered(row, range(len(vs)), threads)
    return DistanceMatrix(
        vertices=vs, values=np.vstack(rows), _pos={v: i for i, v in enumerate(vs)}
    )
