"""Exact integer min-cost transportation kernel (numba-compiled).

Successive shortest paths with node potentials on the bipartite
transportation network: sources with integer supplies, sinks with integer
demands, uncapacitated forward arcs with integer costs. All arithmetic is
integer, so results are exact. Problem sizes here are tiny (supports are
vertex neighborhoods), which keeps the dense O(N^2) Dijkstra scan fastest.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_INF = np.int64(1) << 60


@njit(cache=True)
def transport_min_cost(supply, demand, cost):  # pragma: no cover - jitted
    """Minimum total cost moving integer supply to integer demand.

    supply: int64[m], demand: int64[n], cost: int64[m, n], with
    sum(supply) == sum(demand). Returns the exact optimal integer cost,
    or -1 if the demand cannot be met.
    """
    m = supply.shape[0]
    n = demand.shape[0]
    nn = m + n
    flow = np.zeros((m, n), dtype=np.int64)
    rs = supply.copy()
    rd = demand.copy()
    pot = np.zeros(nn, dtype=np.int64)
    total = np.int64(0)
    remaining = np.int64(0)
    for j in range(n):
        remaining += demand[j]
    dist = np.empty(nn, dtype=np.int64)
    prev = np.empty(nn, dtype=np.int64)
    done = np.empty(nn, dtype=np.bool_)
    while remaining > 0:
        for v in range(nn):
            dist[v] = _INF
            prev[v] = -1
            done[v] = False
        for i in range(m):
            if rs[i] > 0:
                dist[i] = 0
        while True:
            u = -1
            best = _INF
            for v in range(nn):
                if not done[v] and dist[v] < best:
                    best = dist[v]
                    u = v
            if u < 0:
                break
            done[u] = True
            if u < m:
                for j in range(n):
                    w = m + j
                    if not done[w]:
                        nd = dist[u] + cost[u, j] - pot[u] + pot[w]
                        if nd < dist[w]:
                            dist[w] = nd
                            prev[w] = u
            else:
                j = u - m
                for i in range(m):
                    if not done[i] and flow[i, j] > 0:
                        nd = dist[u] - cost[i, j] - pot[u] + pot[i]
                        if nd < dist[i]:
                            dist[i] = nd
                            prev[i] = u
        sink = -1
        best = _INF
        for j in range(n):
            w = m + j
            if rd[j] > 0 and dist[w] < best:
                best = dist[w]
                sink = w
        if sink < 0:
            return np.int64(-1)
        for v in range(nn):
            if dist[v] < _INF:
                pot[v] -= dist[v]
        bottleneck = rd[sink - m]
        v = sink
        while True:
            u = prev[v]
            if u < 0:
                if rs[v] < bottleneck:
                    bottleneck = rs[v]
                break
            if v < m:  # reverse arc, capacity = current flow
                f = flow[v, u - m]
                if f < bottleneck:
                    bottleneck = f
            v = u
        v = sink
        while True:
            u = prev[v]
            if u < 0:
                rs[v] -= bottleneck
                break
            if v >= m:
                flow[u, v - m] += bottleneck
                total += bottleneck * cost[u, v - m]
            else:
                flow[v, u - m] -= bottleneck
                total -= bottleneck * cost[v, u - m]
            v = u
        rd[sink - m] -= bottleneck
        remaining -= bottleneck
    return total
