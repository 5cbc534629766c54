"""Pure-Python shortest-path kernel; reference semantics for the compiled one.

Dijkstra over a CSR graph with a heap keyed by (distance, node index).
Relaxation improves only below dist - tol; a tie within tol updates the
predecessor toward the smaller node index without touching the distance.
Because index order is chosen to encode the documented tie-break keys, the
predecessor tree is deterministic regardless of arc insertion order.
"""

from __future__ import annotations

import heapq
import math


def sssp_csr(indptr, targets, weights, source, dist, pred, tol=1e-9):
    """Fill dist (float64) and pred (int32, -1 for none) in place."""
    n = len(dist)
    # plain lists beat repeated numpy scalar extraction in the inner loop
    ip = indptr.tolist() if hasattr(indptr, "tolist") else indptr
    tg = targets.tolist() if hasattr(targets, "tolist") else targets
    wt = weights.tolist() if hasattr(weights, "tolist") else weights
    d_local = [math.inf] * n
    p_local = [-1] * n
    done = bytearray(n)
    d_local[source] = 0.0
    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = 1
        for k in range(ip[u], ip[u + 1]):
            v = tg[k]
            nd = d + wt[k]
            if nd < d_local[v] - tol:
                d_local[v] = nd
                p_local[v] = u
                heapq.heappush(heap, (nd, v))
            elif not done[v] and nd <= d_local[v] + tol:
                pv = p_local[v]
                if pv != -1 and u < pv:
                    p_local[v] = u
    dist[:] = d_local
    pred[:] = p_local
