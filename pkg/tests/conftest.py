from __future__ import annotations

import math
from pathlib import Path

import pytest

from tempoc.graph import TemporalGraph, Window

DATA = Path(__file__).parent / "data"

# six-vertex toy graph; every test value derived from it was cross-checked
# against the brute-force oracle before being frozen here
FIG1_EDGES = [
    (1, 2, 0), (4, 5, 0), (4, 6, 0), (5, 6, 0),
    (2, 3, 1), (2, 4, 1),
    (1, 2, 2), (2, 3, 2), (3, 4, 2), (4, 5, 2),
]

FIG1_WINDOW = Window(end=2, length=3)


def fig1_distance_table(a: float) -> dict[tuple[int, int], tuple[float, float]]:
    """Symbolic all-pairs distances (forward, backward) for the toy graph."""
    inf = math.inf
    return {
        (1, 2): (a, a),
        (1, 3): (2 * a, 2 * a),
        (1, 4): (min(3 * a, a + 1), min(3 * a, a + 1)),
        (1, 5): (min(4 * a, a + 2), min(4 * a, a + 2)),
        (1, 6): (inf, a + 2),
        (2, 3): (a, a),
        (2, 4): (a, a),
        (2, 5): (min(3 * a, a + 1), min(3 * a, a + 1)),
        (2, 6): (inf, a + 1),
        (3, 4): (a, a),
        (3, 5): (2 * a, 2 * a),
        (3, 6): (inf, min(2 * a + 1, 2)),
        (4, 5): (a, a),
        (4, 6): (a, a),
        (5, 6): (a, a),
    }


@pytest.fixture
def fig1() -> TemporalGraph:
    return TemporalGraph.from_edges(FIG1_EDGES)


@pytest.fixture
def fig1_path() -> Path:
    return DATA / "fig1.csv"


@pytest.fixture
def two_community_path() -> Path:
    return DATA / "two_community.csv"
