"""Temporal network inefficiency of a vertex set.

Each unordered pair {u, v} contributes the mean of two direction terms
1 - alpha/d(u, v), with 1 - alpha/inf = 1 for unreachable pairs, so a pair
lies in [0, 1]: 0 when adjacent both ways, 1 when mutually unreachable.
Distances are taken inside the induced subgraph. At alpha = 0 every finite
nonzero distance scores 1 and zero distances score 0, which makes the
objective nearly constant; that degeneracy triggers a warning.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable

from ._parallel import map_ordered
from .errors import DataError
from .graph import TemporalGraph
from .sfp import all_pairs


def _direction_term(d: float, alpha: float) -> float:
    if math.isinf(d):
        return 1.0
    if d == 0.0:
        # only reachable at alpha = 0; treated as perfectly efficient
        return 0.0
    return 1.0 - alpha / d


def pair_contribution(d_uv: float, d_vu: float, alpha: float) -> float:
    return (_direction_term(d_uv, alpha) + _direction_term(d_vu, alpha)) / 2.0


@dataclass(frozen=True)
class InefficiencyValue:
    total: float
    per_pair: dict[tuple[int, int], float] | None = None


def inefficiency(
    g: TemporalGraph,
    alpha: float,
    s: Iterable[int],
    per_pair: bool = False,
    threads: int = 1,
) -> InefficiencyValue:
    """Inefficiency of the subgraph induced by s over g's span."""
    sset = sorted(set(s))
    if not sset:
        raise DataError("inefficiency needs a nonempty vertex set")
    if alpha == 0.0:
        warnings.warn(
            "alpha=0 scores every connected pair alike; the objective is "
            "nearly constant",
            stacklevel=2,
        )
    m = all_pairs(g, alpha, sset, threads=threads)
    total = 0.0
    pairs: dict[tuple[int, int], float] | None = {} if per_pair else None
    for i, u in enumerate(sset):
        for v in sset[i + 1 :]:
            c = pair_contribution(m.get(u, v), m.get(v, u), alpha)
            total += c
            if pairs is not None:
                pairs[(u, v)] = c
    return InefficiencyValue(total=total, per_pair=pairs)


def removal_gain(
    g: TemporalGraph, alpha: float, s: Iterable[int], v: int, threads: int = 1
) -> float:
    """Drop in inefficiency when v is removed from s."""
    sset = set(s)
    if v not in sset:
        raise DataError(f"vertex {v} not in candidate set")
    before = inefficiency(g, alpha, sset, threads=threads).total
    after = inefficiency(g, alpha, sset - {v}, threads=threads).total
    return before - after
