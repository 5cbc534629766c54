"""Synthetic stream scenarios used across tests.

The two-community generator is the source of the bundled fixture
tests/data/two_community.csv; a test keeps the file and the generator in
sync. Scenario builders return edge lists for TemporalGraph.from_edges.
"""

from __future__ import annotations

import random
from itertools import combinations

TWO_COMMUNITY_SEED = 20260817


def two_community_stream(
    n_per: int = 5,
    horizon: int = 10,
    density: float = 0.55,
    seed: int = TWO_COMMUNITY_SEED,
) -> list[tuple[int, int, int]]:
    """Two dense communities (1..n and n+1..2n) bridged only at t=4 and t=5."""
    rng = random.Random(seed)
    comm_a = list(range(1, n_per + 1))
    comm_b = list(range(n_per + 1, 2 * n_per + 1))
    edges = []
    for t in range(horizon):
        for comm in (comm_a, comm_b):
            for u, v in combinations(comm, 2):
                if rng.random() < density:
                    edges.append((u, v, t))
    for t in (4, 5):
        edges.append((n_per, n_per + 1, t))
    return edges


def random_temporal_graph(
    rng: random.Random,
    min_v: int = 2,
    max_v: int = 6,
    max_w: int = 3,
    density: float = 0.4,
):
    """Random graph with at least one edge; vertices 0..n-1 (isolated kept)."""
    from tempoc.graph import TemporalGraph

    while True:
        n = rng.randint(min_v, max_v)
        span = rng.randint(1, max_w)
        edges = [
            (u, v, t)
            for t in range(span)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < density
        ]
        if edges:
            return TemporalGraph.from_edges(edges, vertices=range(n))


def path_community_stream(horizon: int) -> list[tuple[int, int, int]]:
    """Vertices 1 and 2 only ever reachable through 3, at every timestamp."""
    return [e for t in range(horizon) for e in ((1, 3, t), (2, 3, t))]


def vanishing_community_stream(k: int, horizon: int) -> list[tuple[int, int, int]]:
    """Community {1,2} has edges only before t=k; {5,6} persists throughout."""
    edges = [(1, 2, t) for t in range(k)]
    edges += [(5, 6, t) for t in range(horizon)]
    return edges
