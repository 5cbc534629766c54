import math
import random

import pytest

from synthetic import random_temporal_graph
from tempoc import oracle, transform
from tempoc.errors import DataError
from tempoc.graph import TemporalGraph, Window
from tempoc.transform import (
    KIND_REPLICA,
    KIND_SINK,
    KIND_SOURCE,
    build,
    path_cost,
    replica,
    sink,
    source,
    temporal_path,
    to_dot,
)


def test_node_and_arc_counts(fig1):
    tg = build(fig1, 0.5, sources=(1,), sinks=(6,))
    kinds = [nd.kind for nd in tg.nodes()]
    assert kinds.count(KIND_REPLICA) == 18
    assert kinds.count(KIND_SOURCE) == 1 and kinds.count(KIND_SINK) == 1
    assert tg.n_nodes == 18 + 2

    arcs = list(tg.arcs())
    spatial = [a for a in arcs if a[0].kind == a[1].kind == KIND_REPLICA and a[0].time == a[1].time]
    waiting = [a for a in arcs if a[0].kind == a[1].kind == KIND_REPLICA and a[0].time != a[1].time]
    dummy = [a for a in arcs if a[0].kind != KIND_REPLICA or a[1].kind != KIND_REPLICA]
    assert len(spatial) == 20  # 10 edges, both directions
    assert len(waiting) == 12  # 6 vertices, 2 transitions
    assert len(dummy) == 6  # 3 per requested source/sink
    assert all(w == 0.5 for _, _, w in spatial)
    assert all(w == 0.5 for _, _, w in waiting)
    assert all(w == 0.0 for _, _, w in dummy)


def test_weights_follow_alpha(fig1):
    tg = build(fig1, 0.2, sources=(1,), sinks=(1,))
    for a, b, w in tg.arcs():
        if a.kind == b.kind == KIND_REPLICA:
            assert w == (0.2 if a.time == b.time else 0.8)
        else:
            assert w == 0.0


def test_node_order_encodes_tiebreak_keys(fig1):
    tg = build(fig1, 0.5, sources=(2, 1), sinks=(6,))
    nodes = list(tg.nodes())
    assert nodes[0] == source(1) and nodes[1] == source(2)
    reps = [nd for nd in nodes if nd.kind == KIND_REPLICA]
    assert reps == sorted(reps, key=lambda nd: (nd.time, nd.vertex))
    assert nodes[-1] == sink(6)


def test_index_ref_roundtrip(fig1):
    tg = build(fig1, 0.5, sources=(1, 4), sinks=(4, 6))
    for i, nd in enumerate(tg.nodes()):
        assert tg.index_of(nd) == i
        assert tg.ref_of(i) == nd


def test_dummies_only_for_requested(fig1):
    tg = build(fig1, 0.5)
    assert tg.n_nodes == 18
    with pytest.raises(DataError, match="no source dummy"):
        tg.index_of(source(1))


def test_build_validation(fig1):
    with pytest.raises(ValueError, match="alpha"):
        build(fig1, 1.5)
    with pytest.raises(DataError, match="unknown vertex"):
        build(fig1, 0.5, sources=(99,))


def test_path_cost_and_temporal_path(fig1):
    tg = build(fig1, 0.5, sources=(6,), sinks=(1,))
    path = [source(6), replica(6, 0), replica(4, 0), replica(4, 1),
            replica(2, 1), replica(2, 2), replica(1, 2), sink(1)]
    assert path_cost(tg, path) == pytest.approx(2.5)
    assert temporal_path(tg, path) == [(6, 4, 0), (4, 2, 1), (2, 1, 2)]


def test_path_cost_rejects_non_arcs(fig1):
    tg = build(fig1, 0.5)
    with pytest.raises(DataError, match="no arc"):
        path_cost(tg, [replica(1, 0), replica(6, 0)])


def test_to_dot_labels(fig1):
    tg = build(fig1, 0.25, sources=(1,), sinks=(6,))
    dot = to_dot(tg)
    assert '"src:1" -> "1@0" [label="0.0000"];' in dot
    assert '"6@2" -> "sink:6" [label="0.0000"];' in dot
    assert '[label="0.2500"]' in dot and '[label="0.7500"]' in dot


def _arc_map(tg):
    out = {}
    for a, b, w in tg.arcs():
        out.setdefault(a, []).append((b, w))
    return out


def _expanded_paths(tg, start, goal, cap=4000):
    """All simple start -> goal paths in the transformed graph."""
    adj = _arc_map(tg)
    found = []
    stack = [(start, (start,), 0.0)]
    while stack and len(found) < cap:
        cur, path, cost = stack.pop()
        for nxt, w in adj.get(cur, ()):
            if nxt in path:
                continue
            if nxt == goal:
                found.append((path + (nxt,), cost + w))
            else:
                stack.append((nxt, path + (nxt,), cost + w))
    assert len(found) < cap, "path cap hit; shrink the test graph"
    return found


def _valid_time_respecting(g: TemporalGraph, edges) -> bool:
    last_t = None
    for u, v, t in edges:
        if (min(u, v), max(u, v)) not in g.snapshots.get(t, frozenset()):
            return False
        if last_t is not None and t < last_t:
            return False
        last_t = t
    for i in range(1, len(edges)):
        if edges[i][0] != edges[i - 1][1]:
            return False
    return True


def _eq1_cost(alpha, edges):
    return alpha * len(edges) + (1 - alpha) * (edges[-1][2] - edges[0][2])


def test_roundtrip_against_path_enumeration():
    """Replica-to-replica paths and temporal paths are in cost-preserving
    correspondence: stripping a transformed path gives a valid edge sequence
    of the same cost, and every enumerated temporal path embeds back."""
    rng = random.Random(11)
    for _ in range(6):
        g = random_temporal_graph(rng, min_v=3, max_v=4, max_w=2, density=0.5)
        alpha = rng.choice([0.0, 0.3, 0.7, 1.0])
        vs = sorted(g.vertices)
        u, v = rng.sample(vs, 2)
        tg = build(g, alpha)

        # transformed -> temporal
        for t_start in range(g.t_min, g.t_max + 1):
            for t_end in range(g.t_min, g.t_max + 1):
                for path, cost in _expanded_paths(tg, replica(u, t_start), replica(v, t_end)):
                    edges = temporal_path(tg, list(path))
                    spatial = [s for s in path if s.kind == KIND_REPLICA]
                    assert len(spatial) == len(path)
                    if not edges:
                        continue
                    assert _valid_time_respecting(g, edges)
                    wait_before = edges[0][2] - t_start
                    wait_after = t_end - edges[-1][2]
                    expected = _eq1_cost(alpha, edges) + (wait_before + wait_after) * (1 - alpha)
                    assert cost == pytest.approx(expected, abs=1e-9)

        # temporal -> transformed
        w = g.window
        enum = oracle.enumerate_paths(g, w, u, v, alpha)
        for edges, cost in enum.paths:
            if not edges:
                continue
            nodes = [replica(edges[0][0], edges[0][2])]
            for eu, ev, t in edges:
                while nodes[-1].time < t:
                    nodes.append(replica(nodes[-1].vertex, nodes[-1].time + 1))
                nodes.append(replica(ev, t))
            assert path_cost(tg, nodes) == pytest.approx(cost, abs=1e-9)


def test_window_preserved(fig1):
    tg = build(fig1, 0.5)
    assert tg.window == Window(end=2, length=3)
    assert tg.vertex_order == (1, 2, 3, 4, 5, 6)
