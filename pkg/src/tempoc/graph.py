"""Temporal graph model.

A temporal graph is a fixed vertex set observed over consecutive integer
timestamps, with one undirected edge set per timestamp. Snapshots are
materialized for every timestamp in [t_min, t_max], so consecutive snapshot
keys always differ by exactly 1; timestamps with no edges hold an empty set.
Edges are stored canonically as (u, v) with u < v.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import DataError, ParseError

TemporalEdge = tuple[int, int, int]  # (u, v, t) with u < v


@dataclass(frozen=True)
class Window:
    """Closed timestamp interval [end - (length - 1), end]."""

    end: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"window length must be >= 1, got {self.length}")
        if self.start < 0:
            raise ValueError(f"window start must be >= 0, got {self.start}")

    @property
    def start(self) -> int:
        return self.end - (self.length - 1)

    def timestamps(self) -> range:
        return range(self.start, self.end + 1)

    def __contains__(self, t: int) -> bool:
        return self.start <= t <= self.end


@dataclass(frozen=True)
class TemporalGraph:
    vertices: frozenset[int]
    snapshots: dict[int, frozenset[tuple[int, int]]]

    @property
    def t_min(self) -> int:
        return min(self.snapshots)

    @property
    def t_max(self) -> int:
        return max(self.snapshots)

    @property
    def window(self) -> Window:
        return Window(end=self.t_max, length=self.t_max - self.t_min + 1)

    @property
    def edge_count(self) -> int:
        return sum(len(es) for es in self.snapshots.values())

    def iter_edges(self) -> Iterator[TemporalEdge]:
        for t in sorted(self.snapshots):
            for u, v in sorted(self.snapshots[t]):
                yield (u, v, t)

    def edges_at(self, t: int) -> frozenset[tuple[int, int]]:
        return self.snapshots[t]

    def summary(self) -> dict:
        return {
            "vertices": len(self.vertices),
            "snapshots": len(self.snapshots),
            "edges": self.edge_count,
        }

    def summary_json(self) -> str:
        return json.dumps(self.summary())

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[TemporalEdge],
        vertices: Iterable[int] | None = None,
    ) -> "TemporalGraph":
        """Build a graph from (u, v, t) triples, canonicalizing and deduplicating.

        `vertices` may add isolated vertices; it must cover every endpoint.
        """
        by_t: dict[int, set[tuple[int, int]]] = {}
        seen: set[int] = set()
        for u, v, t in edges:
            if u == v:
                raise DataError(f"self-loop on vertex {u} at t={t}")
            if t < 0:
                raise DataError(f"negative timestamp {t}")
            a, b = (u, v) if u < v else (v, u)
            by_t.setdefault(t, set()).add((a, b))
            seen.add(a)
            seen.add(b)
        if not by_t:
            raise DataError("no edges: temporal graph needs at least one edge")
        if vertices is None:
            vset = frozenset(seen)
        else:
            vset = frozenset(vertices)
            missing = seen - vset
            if missing:
                raise DataError(f"edge endpoints not in vertex set: {sorted(missing)}")
        lo, hi = min(by_t), max(by_t)
        snaps = {t: frozenset(by_t.get(t, ())) for t in range(lo, hi + 1)}
        return cls(vertices=vset, snapshots=snaps)


def _parse_fields(line: str) -> list[str]:
    # comma, tab, and bare whitespace separators all normalize the same way
    return line.replace(",", " ").split()


def load_edges(source: str | Path | Iterable[str]) -> TemporalGraph:
    """Parse an edge list of `u v t` lines (comma, tab, or space separated).

    Blank lines and lines starting with '#' are skipped. Duplicate edges are
    deduplicated, self-loops are skipped (one warning reports the count), and
    a negative timestamp or malformed line raises ParseError with its line
    number. Input line order never affects the result.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            return load_edges(list(fh))
    edges: list[TemporalEdge] = []
    self_loops = 0
    for line_no, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = _parse_fields(line)
        if len(fields) != 3:
            raise ParseError(f"expected 'u v t', got {line!r}", line_no)
        try:
            u, v, t = (int(f) for f in fields)
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", line_no) from None
        if t < 0:
            raise ParseError(f"negative timestamp {t}", line_no)
        if u == v:
            self_loops += 1
            continue
        edges.append((u, v, t))
    if self_loops:
        warnings.warn(f"skipped {self_loops} self-loop(s)", stacklevel=2)
    if not edges:
        raise ParseError("no edges in input")
    return TemporalGraph.from_edges(edges)


def load_snapshot_dir(path: str | Path) -> TemporalGraph:
    """Load a directory of per-snapshot files named snapshot_<t>.csv.

    Each file holds `u v` or `u v t` lines; when a third field is present it
    must match the filename's timestamp. Missing indices between the smallest
    and largest become empty snapshots.
    """
    path = Path(path)
    indexed: dict[int, Path] = {}
    for p in sorted(path.glob("snapshot_*.csv")):
        stem = p.stem.removeprefix("snapshot_")
        try:
            indexed[int(stem)] = p
        except ValueError:
            raise ParseError(f"bad snapshot filename {p.name!r}") from None
    if not indexed:
        raise DataError(f"no snapshot_<t>.csv files in {path}")
    edges: list[TemporalEdge] = []
    for t, p in sorted(indexed.items()):
        if t < 0:
            raise DataError(f"negative snapshot index in {p.name!r}")
        with open(p, "r", encoding="utf-8") as fh:
            for line_no, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                fields = _parse_fields(line)
                if len(fields) not in (2, 3):
                    raise ParseError(f"{p.name}: expected 'u v' or 'u v t', got {line!r}", line_no)
                try:
                    nums = [int(f) for f in fields]
                except ValueError:
                    raise ParseError(f"{p.name}: non-integer field in {line!r}", line_no) from None
                if len(nums) == 3 and nums[2] != t:
                    raise ParseError(f"{p.name}: timestamp {nums[2]} != file index {t}", line_no)
                if nums[0] == nums[1]:
                    continue
                edges.append((nums[0], nums[1], t))
    if not edges:
        raise DataError(f"no edges in snapshot files under {path}")
    g = TemporalGraph.from_edges(edges)
    # materialize the full file range even if boundary files were empty
    lo, hi = min(indexed), max(indexed)
    snaps = {t: g.snapshots.get(t, frozenset()) for t in range(lo, hi + 1)}
    return TemporalGraph(vertices=g.vertices, snapshots=snaps)


def project(g: TemporalGraph, w: Window) -> TemporalGraph:
    """Restrict to the snapshots inside w, clipped to the loaded span."""
    lo = max(w.start, g.t_min)
    hi = min(w.end, g.t_max)
    if lo > hi:
        raise DataError(
            f"window [{w.start},{w.end}] does not intersect span [{g.t_min},{g.t_max}]"
        )
    return TemporalGraph(
        vertices=g.vertices,
        snapshots={t: g.snapshots[t] for t in range(lo, hi + 1)},
    )


def induce(g: TemporalGraph, s: Iterable[int]) -> TemporalGraph:
    """Subgraph on vertex set s: keeps edges with both endpoints in s."""
    sset = frozenset(s)
    stray = sset - g.vertices
    if stray:
        raise DataError(f"vertices not in graph: {sorted(stray)}")
    return TemporalGraph(
        vertices=sset,
        snapshots={
            t: frozenset(e for e in es if e[0] in sset and e[1] in sset)
            for t, es in g.snapshots.items()
        },
    )
