"""Time-expanded transformation of a temporal graph.

Every vertex v gets one replica node (v, t) per timestamp t in the span.
Arcs, weighted by the cost trade-off alpha:

- spatial: for each edge {u, v} at t, both (u,t)->(v,t) and (v,t)->(u,t),
  weight alpha (one hop, no time);
- waiting: (v,t)->(v,t+1), weight 1-alpha (one timestep, no hop);
- dummies: Source(v)->(v,t) for all t and (v,t)->Sink(v) for all t, weight 0,
  created only for requested source/sink vertices.

A minimum-weight Source(u)->Sink(v) path then costs exactly
alpha*hops + (1-alpha)*duration minimized over time-respecting paths.

Nodes are indexed so that ascending index encodes the shortest-path
tie-break order: sources (by vertex), then replicas by (timestamp, vertex),
then sinks (by vertex). The kernel prefers smaller indices on ties, which
makes predecessor trees deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .errors import DataError
from .graph import TemporalGraph, Window

KIND_SOURCE = 0
KIND_REPLICA = 1
KIND_SINK = 2

_KIND_NAMES = {KIND_SOURCE: "source", KIND_REPLICA: "replica", KIND_SINK: "sink"}


class Node(NamedTuple):
    kind: int
    vertex: int
    time: int = -1

    def label(self) -> str:
        if self.kind == KIND_REPLICA:
            return f"{self.vertex}@{self.time}"
        if self.kind == KIND_SOURCE:
            return f"src:{self.vertex}"
        return f"sink:{self.vertex}"

    def __repr__(self):
        return f"Node({_KIND_NAMES[self.kind]}, {self.label()})"


def replica(v: int, t: int) -> Node:
    return Node(KIND_REPLICA, v, t)


def source(v: int) -> Node:
    return Node(KIND_SOURCE, v)


def sink(v: int) -> Node:
    return Node(KIND_SINK, v)


@dataclass
class TransformedGraph:
    window: Window
    alpha: float
    vertex_order: tuple[int, ...]
    sources: tuple[int, ...]
    sinks: tuple[int, ...]
    indptr: np.ndarray
    targets: np.ndarray
    weights: np.ndarray
    _rank: dict[int, int] = field(repr=False)
    _arc_lookup: dict[tuple[int, int], float] | None = field(default=None, repr=False)

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_order)

    @property
    def n_nodes(self) -> int:
        return len(self.indptr) - 1

    @property
    def n_arcs(self) -> int:
        return len(self.targets)

    def index_of(self, node: Node) -> int:
        n = self.n_vertices
        L = self.window.length
        if node.kind == KIND_REPLICA:
            vi = self._rank.get(node.vertex)
            ti = node.time - self.window.start
            if vi is None or not (0 <= ti < L):
                raise DataError(f"node {node.label()} not in transformed graph")
            return len(self.sources) + ti * n + vi
        if node.kind == KIND_SOURCE:
            try:
                return self.sources.index(node.vertex)
            except ValueError:
                raise DataError(f"no source dummy for vertex {node.vertex}") from None
        try:
            return len(self.sources) + L * n + self.sinks.index(node.vertex)
        except ValueError:
            raise DataError(f"no sink dummy for vertex {node.vertex}") from None

    def ref_of(self, idx: int) -> Node:
        ns = len(self.sources)
        n = self.n_vertices
        L = self.window.length
        if idx < ns:
            return source(self.sources[idx])
        idx -= ns
        if idx < L * n:
            ti, vi = divmod(idx, n)
            return replica(self.vertex_order[vi], self.window.start + ti)
        idx -= L * n
        if idx < len(self.sinks):
            return sink(self.sinks[idx])
        raise DataError(f"node index out of range: {idx}")

    def nodes(self) -> Iterator[Node]:
        for i in range(self.n_nodes):
            yield self.ref_of(i)

    def arcs(self) -> Iterator[tuple[Node, Node, float]]:
        for i in range(self.n_nodes):
            a = self.ref_of(i)
            for k in range(self.indptr[i], self.indptr[i + 1]):
                yield (a, self.ref_of(int(self.targets[k])), float(self.weights[k]))

    def arc_weight(self, a: int, b: int) -> float:
        if self._arc_lookup is None:
            lut = {}
            for i in range(self.n_nodes):
                for k in range(self.indptr[i], self.indptr[i + 1]):
                    lut[(i, int(self.targets[k]))] = float(self.weights[k])
            self._arc_lookup = lut
        try:
            return self._arc_lookup[(a, b)]
        except KeyError:
            raise DataError(
                f"no arc {self.ref_of(a).label()} -> {self.ref_of(b).label()}"
            ) from None


def build(
    g: TemporalGraph,
    alpha: float,
    sources: Iterable[int] = (),
    sinks: Iterable[int] = (),
) -> TransformedGraph:
    """Build the transformed graph over g's full span."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    src_list = tuple(sorted(set(sources)))
    snk_list = tuple(sorted(set(sinks)))
    for v in src_list + snk_list:
        if v not in g.vertices:
            raise DataError(f"dummy requested for unknown vertex {v}")

    vs = tuple(sorted(g.vertices))
    rank = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    t0 = g.t_min
    L = g.t_max - t0 + 1
    ns, nk = len(src_list), len(snk_list)
    n_nodes = ns + n * L + nk
    rep0 = ns

    def rep_idx(vi: int, ti: int) -> int:
        return rep0 + ti * n + vi

    # per-layer adjacency in vertex-rank space, neighbor lists sorted
    layers: list[dict[int, list[int]]] = []
    for ti in range(L):
        adj: dict[int, list[int]] = {}
        for u, v in g.snapshots[t0 + ti]:
            adj.setdefault(rank[u], []).append(rank[v])
            adj.setdefault(rank[v], []).append(rank[u])
        layers.append({vi: sorted(nbrs) for vi, nbrs in adj.items()})

    sink_pos = {v: ns + L * n + j for j, v in enumerate(snk_list)}
    w_spatial = float(alpha)
    w_wait = 1.0 - float(alpha)

    indptr = np.zeros(n_nodes + 1, dtype=np.int64)
    tgt: list[int] = []
    wgt: list[float] = []
    for j in range(ns):
        vi = rank[src_list[j]]
        for ti in range(L):
            tgt.append(rep_idx(vi, ti))
            wgt.append(0.0)
        indptr[j + 1] = len(tgt)
    for ti in range(L):
        layer = layers[ti]
        for vi in range(n):
            # targets appended in ascending index order: same-layer spatial
            # arcs, then the waiting arc, then the sink dummy
            for nbr in layer.get(vi, ()):
                tgt.append(rep_idx(nbr, ti))
                wgt.append(w_spatial)
            if ti + 1 < L:
                tgt.append(rep_idx(vi, ti + 1))
                wgt.append(w_wait)
            pos = sink_pos.get(vs[vi])
            if pos is not None:
                tgt.append(pos)
                wgt.append(0.0)
            indptr[rep_idx(vi, ti) + 1] = len(tgt)
    for j in range(nk):
        indptr[ns + L * n + j + 1] = len(tgt)

    return TransformedGraph(
        window=g.window,
        alpha=float(alpha),
        vertex_order=vs,
        sources=src_list,
        sinks=snk_list,
        indptr=indptr,
        targets=np.asarray(tgt, dtype=np.int32),
        weights=np.asarray(wgt, dtype=np.float64),
        _rank=rank,
    )


def path_cost(tg: TransformedGraph, path: list[Node]) -> float:
    """Sum of arc weights along a node path; raises if a step is not an arc."""
    total = 0.0
    idxs = [tg.index_of(nd) for nd in path]
    for a, b in zip(idxs, idxs[1:]):
        total += tg.arc_weight(a, b)
    return total


def temporal_path(tg: TransformedGraph, path: list[Node]) -> list[tuple[int, int, int]]:
    """Strip a transformed-graph path to its temporal edges, as traversed.

    Spatial arcs become (u, v, t) triples in traversal direction; waiting and
    dummy arcs vanish.
    """
    out = []
    for a, b in zip(path, path[1:]):
        if a.kind == KIND_REPLICA and b.kind == KIND_REPLICA and a.time == b.time:
            out.append((a.vertex, b.vertex, a.time))
    return out


def to_dot(tg: TransformedGraph) -> str:
    """Graphviz rendering; arc labels carry weights to 4 decimals."""
    lines = ["digraph transformed {"]
    for nd in tg.nodes():
        lines.append(f'  "{nd.label()}";')
    for a, b, w in tg.arcs():
        lines.append(f'  "{a.label()}" -> "{b.label()}" [label="{w:.4f}"];')
    lines.append("}")
    return "\n".join(lines)
