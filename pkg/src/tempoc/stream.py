"""Sliding-window solving with an adaptive query set.

Snapshots arrive in timestamp order into a ring buffer of fixed length; each
full window is solved for the current query set, then the query set adapts:

- lambda_out: a query vertex disconnected inside the solution for lambda_out
  consecutive emissions is removed (never the last remaining member);
- lambda_in: a non-query vertex present in the solution for lambda_in
  consecutive emissions joins the query set.

A broken streak resets its counter. Removals are applied before additions;
membership is judged against the query set the solution was computed with,
so a vertex removed this step cannot re-enter in the same step. Re-entry at
later steps is allowed unless disabled.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import DataError
from .graph import TemporalGraph, Window
from .search import Solution, solve


@dataclass
class AdaptiveConfig:
    window_length: int
    alpha: float
    depth: int = 1
    lambda_in: int | None = None
    lambda_out: int | None = None
    allow_reentry: bool = True
    emit_partial: bool = False
    threads: int = 1
    keep_trace: bool = False
    rng: object = None

    def __post_init__(self):
        if self.window_length < 1:
            raise ValueError(f"window_length must be >= 1, got {self.window_length}")
        for name in ("lambda_in", "lambda_out"):
            lam = getattr(self, name)
            if lam is not None and lam < 1:
                raise ValueError(f"{name} must be >= 1, got {lam}")


@dataclass
class QueryState:
    q0: frozenset[int]
    q: set[int]
    in_streak: dict[int, int] = field(default_factory=dict)
    out_streak: dict[int, int] = field(default_factory=dict)
    removed: set[int] = field(default_factory=set)

    @classmethod
    def initial(cls, q0: Iterable[int]) -> "QueryState":
        q0 = frozenset(q0)
        if not q0:
            raise DataError("initial query set must be nonempty")
        return cls(q0=q0, q=set(q0))


class WindowBuffer:
    """Ring buffer of the last `window_length` snapshots."""

    def __init__(self, window_length: int, universe: Iterable[int]):
        self.window_length = window_length
        self.universe = frozenset(universe)
        self._snaps: deque[tuple[int, frozenset[tuple[int, int]]]] = deque(
            maxlen=window_length
        )

    def push(self, t: int, edges: Iterable[tuple[int, int]]) -> None:
        if self._snaps and t != self._snaps[-1][0] + 1:
            raise DataError(
                f"snapshots must arrive consecutively: got t={t} after "
                f"t={self._snaps[-1][0]}"
            )
        canon = frozenset(
            (u, v) if u < v else (v, u) for u, v in edges if u != v
        )
        self._snaps.append((t, canon))

    @property
    def full(self) -> bool:
        return len(self._snaps) == self.window_length

    @property
    def end(self) -> int:
        return self._snaps[-1][0]

    def window(self) -> Window:
        return Window(end=self.end, length=len(self._snaps))

    def to_graph(self) -> TemporalGraph:
        return TemporalGraph(
            vertices=self.universe, snapshots=dict(self._snaps)
        )


def _apply_rules(state: QueryState, sol: Solution, cfg: AdaptiveConfig) -> None:
    q_before = frozenset(state.q)
    if cfg.lambda_out is not None:
        for v in sorted(q_before):
            if v in sol.disconnected_query:
                state.out_streak[v] = state.out_streak.get(v, 0) + 1
            else:
                state.out_streak.pop(v, None)
        for v in sorted(q_before):
            if state.out_streak.get(v, 0) >= cfg.lambda_out and len(state.q) > 1:
                state.q.remove(v)
                state.removed.add(v)
                state.out_streak.pop(v, None)
                state.in_streak.pop(v, None)
    if cfg.lambda_in is not None:
        eligible = set(sol.vertices) - q_before
        if not cfg.allow_reentry:
            eligible -= state.removed
        for u in sorted(eligible):
            state.in_streak[u] = state.in_streak.get(u, 0) + 1
            if state.in_streak[u] >= cfg.lambda_in:
                state.q.add(u)
                state.in_streak.pop(u, None)
                state.removed.discard(u)
        for u in list(state.in_streak):
            if u not in eligible:
                state.in_streak.pop(u)


def step(
    state: QueryState,
    buffer: WindowBuffer,
    snapshot: tuple[int, Iterable[tuple[int, int]]],
    cfg: AdaptiveConfig,
) -> tuple[Solution | None, QueryState]:
    """Advance one timestamp; solve and adapt if the window is ready.

    Returns (solution, state); solution is None during warm-up unless
    emit_partial is set. The state is updated in place and returned.
    """
    t, edges = snapshot
    buffer.push(t, edges)
    if not buffer.full and not cfg.emit_partial:
        return None, state
    g = buffer.to_graph()
    sol = solve(
        g,
        buffer.window(),
        cfg.alpha,
        frozenset(state.q),
        depth=cfg.depth,
        threads=cfg.threads,
        keep_trace=cfg.keep_trace,
        rng=cfg.rng,
    )
    _apply_rules(state, sol, cfg)
    return sol, state


def run_stream(
    g: TemporalGraph, q0: Iterable[int], cfg: AdaptiveConfig
) -> Iterator[Solution]:
    """Replay g snapshot by snapshot, yielding one Solution per emission."""
    missing = sorted(frozenset(q0) - g.vertices)
    if missing:
        raise DataError(f"query vertices not in graph: {missing}")
    state = QueryState.initial(q0)
    buffer = WindowBuffer(cfg.window_length, g.vertices)
    for t in range(g.t_min, g.t_max + 1):
        sol, state = step(state, buffer, (t, g.snapshots[t]), cfg)
        if sol is not None:
            yield sol
