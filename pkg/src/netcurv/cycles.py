"""Simple-cycle enumeration and per-edge cycle aggregates.

A cycle is a cyclic sequence of distinct vertices in which consecutive
vertices (cyclically) are joined by edges. Cycles are stored canonically:
rotated so the smallest vertex comes first, then oriented so the second
vertex is the smaller of the first vertex's two cycle neighbors. Each
simple cycle therefore appears exactly once regardless of rotation or
reflection.

For augmented Forman curvature we never need the full edge-by-edge count
matrix, only three per-edge reductions of it:

* the number of cycles through an edge,
* the number of vertex-sharing edges that co-occur with it in a cycle,
* for each non-vertex-sharing partner, how many co-occurrences traverse
  the two edges in the same small-to-large direction ("aligned") versus
  opposite directions.

Alignment of two edges inside a cycle: traverse the cycle in either
direction and record, for each member edge, whether it is walked from its
smaller to its larger vertex. Two edges are aligned when their senses
match. Reversing the traversal flips both senses, so alignment is
direction-independent and the canonical orientation is merely a
convenience.

The census is built once from all cycles and supports incremental edge
deletion: removing an edge kills exactly the cycles through it, and all
aggregates are decremented in time proportional to those cycles.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from typing import Sequence

import numpy as np

from .graphs import Edge, Graph, canon_edge

Cycle = tuple[int, ...]

# non-consecutive member-edge position pairs, by cycle length
_NONADJ_POS = {
    3: [],
    4: [(0, 2), (1, 3)],
    5: [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)],
}


def canonical_cycle(vs: Sequence[int]) -> Cycle:
    """Canonical form of a vertex cycle: min vertex first, smaller second."""
    vs = tuple(vs)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise ValueError(f"not a simple cycle: {vs}")
    i = vs.index(min(vs))
    rot = vs[i:] + vs[:i]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def enumerate_cycles(g: Graph, max_len: int) -> list[Cycle]:
    """All simple cycles of length 3..max_len, each once, in canonical form.

    Cycles with chords count: a 4-cycle inside a complete graph is still a
    4-cycle. Enumeration extends paths from each start vertex s through
    vertices larger than s and emits a cycle when the path closes back to
    s with second vertex smaller than last (killing the reflection).
    """
    if max_len not in (3, 4, 5):
        raise ValueError(f"max_len must be 3, 4 or 5, got {max_len}")
    adj = {v: g.neighbors(v) for v in g.vertices}
    out: list[Cycle] = []

    for s in g.vertices:
        sadj = set(adj[s])
        if len(sadj) < 2:
            continue
        path = [s]
        in_path = {s}

        def dfs() -> None:
            last = path[-1]
            nbrs = adj[last]
            for idx in range(bisect_right(nbrs, s), len(nbrs)):
                w = nbrs[idx]
                if w in in_path:
                    continue
                if len(path) >= 2 and w in sadj and path[1] < w:
                    out.append(tuple(path) + (w,))
                if len(path) + 1 < max_len:
                    path.append(w)
                    in_path.add(w)
                    dfs()
                    path.pop()
                    in_path.remove(w)

        dfs()
    return out


def aligned(cycle: Sequence[int], e: Edge, f: Edge) -> bool:
    """True when cycle traverses e and f in the same small-to-large sense.

    Accepts the cycle in any rotation or direction; reversal flips both
    senses simultaneously, so the answer only depends on the cycle itself.
    """
    e = canon_edge(*e)
    f = canon_edge(*f)
    if e == f:
        raise ValueError("alignment needs two distinct edges")
    se = sf = 0
    n = len(cycle)
    for i in range(n):
        u, v = cycle[i], cycle[(i + 1) % n]
        pair = canon_edge(u, v)
        if pair == e:
            se = 1 if u < v else -1
        elif pair == f:
            sf = 1 if u < v else -1
    if se == 0 or sf == 0:
        raise ValueError(f"edge {e if se == 0 else f} not on cycle {tuple(cycle)}")
    return se == sf


class CycleCensus:
    """Per-edge cycle aggregates with incremental deletion support.

    Edges keep the index they have in the source graph's canonical edge
    order for the census's whole lifetime; deletions flip alive flags
    rather than renumbering. All heavy arrays are shared between a census
    and its post-deletion copies; only the mutable aggregate state is
    copied, so the functional `delete_edge_from_census` stays cheap.
    """

    def __init__(self, g: Graph, cycles: list[Cycle], max_len: int):
        self.max_len = max_len
        self.edge_pairs: tuple[Edge, ...] = g.edges
        self._eidx = {e: i for i, e in enumerate(self.edge_pairs)}
        self._cycles = cycles
        m = len(self.edge_pairs)
        self._m = m
        k = len(cycles)

        # dense vertex/edge keys let everything below vectorize
        verts = np.asarray(g.vertices, dtype=np.int64)
        n = len(verts)
        edge_keys = np.empty(m, dtype=np.int64)
        for i, (u, v) in enumerate(self.edge_pairs):
            edge_keys[i] = g.vertex_index(u) * n + g.vertex_index(v)
        # canonical edge order is lexicographic, so edge_keys is sorted
        # and searchsorted on it recovers edge indices directly

        self._cyc_len = np.fromiter((len(c) for c in cycles), dtype=np.int8, count=k)
        self._cyc_edges = np.full((k, 5), -1, dtype=np.int32)
        self._cyc_sense = np.zeros((k, 5), dtype=np.int8)

        adj_key_parts: list[np.ndarray] = []
        na_key_parts: list[np.ndarray] = []
        na_sgn_parts: list[np.ndarray] = []
        for ell in range(3, max_len + 1):
            rows = np.nonzero(self._cyc_len == ell)[0]
            if rows.size == 0:
                continue
            vmat = np.asarray([cycles[int(r)] for r in rows], dtype=np.int64)
            dmat = np.searchsorted(verts, vmat)
            eids = np.empty((rows.size, ell), dtype=np.int32)
            sens = np.empty((rows.size, ell), dtype=np.int8)
            for c in range(ell):
                a = dmat[:, c]
                b = dmat[:, (c + 1) % ell]
                lo = np.minimum(a, b)
                hi = np.maximum(a, b)
                eids[:, c] = np.searchsorted(edge_keys, lo * n + hi)
                sens[:, c] = np.where(a < b, 1, -1)
            self._cyc_edges[rows, :ell] = eids
            self._cyc_sense[rows, :ell] = sens
            for c in range(ell):
                a = eids[:, c].astype(np.int64)
                b = eids[:, (c + 1) % ell].astype(np.int64)
                adj_key_parts.append(np.minimum(a, b) * m + np.maximum(a, b))
            for c1, c2 in _NONADJ_POS[ell]:
                a = eids[:, c1].astype(np.int64)
                b = eids[:, c2].astype(np.int64)
                na_key_parts.append(np.minimum(a, b) * m + np.maximum(a, b))
                na_sgn_parts.append((sens[:, c1] * sens[:, c2]).astype(np.int64))

        # cycle count per edge
        self._diag = np.zeros(m, dtype=np.int64)
        valid = self._cyc_edges[self._cyc_edges >= 0]
        if valid.size:
            self._diag += np.bincount(valid, minlength=m)

        # vertex-sharing partners that co-occur in at least one cycle
        self._mcnt = np.zeros(m, dtype=np.int64)
        if adj_key_parts:
            keys = np.concatenate(adj_key_parts)
            self._adj_keys, self._adj_cnt = np.unique(keys, return_counts=True)
            self._adj_cnt = self._adj_cnt.astype(np.int64)
            self._mcnt += np.bincount(self._adj_keys // m, minlength=m)
            self._mcnt += np.bincount(self._adj_keys % m, minlength=m)
        else:
            self._adj_keys = np.empty(0, dtype=np.int64)
            self._adj_cnt = np.empty(0, dtype=np.int64)

        # non-sharing partners: net aligned-minus-unaligned per pair
        self._nsum = np.zeros(m, dtype=np.int64)
        if na_key_parts:
            keys = np.concatenate(na_key_parts)
            sgns = np.concatenate(na_sgn_parts)
            self._na_keys, inv, cnt = np.unique(
                keys, return_inverse=True, return_counts=True
            )
            self._na_cnt = cnt.astype(np.int64)
            self._na_sgn = np.zeros(len(self._na_keys), dtype=np.int64)
            np.add.at(self._na_sgn, inv, sgns)
            np.add.at(self._nsum, self._na_keys // m, np.abs(self._na_sgn))
            np.add.at(self._nsum, self._na_keys % m, np.abs(self._na_sgn))
        else:
            self._na_keys = np.empty(0, dtype=np.int64)
            self._na_cnt = np.empty(0, dtype=np.int64)
            self._na_sgn = np.empty(0, dtype=np.int64)

        # edge -> cycles index (CSR layout over global cycle ids)
        if k:
            lens = self._cyc_len.astype(np.int64)
            flat_edges = self._cyc_edges[self._cyc_edges >= 0]
            flat_gids = np.repeat(np.arange(k, dtype=np.int32), lens)
            order = np.argsort(flat_edges, kind="stable")
            self._e2c_gids = flat_gids[order]
            counts = np.bincount(flat_edges, minlength=m)
            self._e2c_ptr = np.concatenate(([0], np.cumsum(counts)))
        else:
            self._e2c_gids = np.empty(0, dtype=np.int32)
            self._e2c_ptr = np.zeros(m + 1, dtype=np.int64)

        self._alive = np.ones(k, dtype=bool)
        self._edge_alive = np.ones(m, dtype=bool)

    # -- bookkeeping ---------------------------------------------------

    def _copy(self) -> "CycleCensus":
        new = object.__new__(CycleCensus)
        for name in (
            "max_len", "edge_pairs", "_eidx", "_cycles", "_m",
            "_cyc_len", "_cyc_edges", "_cyc_sense",
            "_adj_keys", "_na_keys", "_e2c_gids", "_e2c_ptr",
        ):
            setattr(new, name, getattr(self, name))
        for name in (
            "_diag", "_mcnt", "_nsum", "_adj_cnt", "_na_cnt", "_na_sgn",
            "_alive", "_edge_alive",
        ):
            setattr(new, name, getattr(self, name).copy())
        return new

    def _index(self, e: Edge) -> int:
        e = canon_edge(*e)
        idx = self._eidx.get(e)
        if idx is None or not self._edge_alive[idx]:
            raise ValueError(f"edge {e} not in census")
        return idx

    def _alive_gids(self, idx: int) -> list[int]:
        lo, hi = self._e2c_ptr[idx], self._e2c_ptr[idx + 1]
        return [int(g) for g in self._e2c_gids[lo:hi] if self._alive[g]]

    # -- queries ---------------------------------------------------------

    def edges(self) -> list[Edge]:
        """Edges still alive, in canonical order."""
        return [e for e, a in zip(self.edge_pairs, self._edge_alive) if a]

    def cycles(self) -> list[Cycle]:
        """Alive cycles in canonical form, in enumeration order."""
        return [c for c, a in zip(self._cycles, self._alive) if a]

    def cycle_count(self, e: Edge) -> int:
        """Number of indexed cycles containing e."""
        return int(self._diag[self._index(e)])

    def shared_neighbors(self, e: Edge) -> set[Edge]:
        """Vertex-sharing edges that co-occur with e in at least one cycle."""
        idx = self._index(e)
        partners: set[int] = set()
        edges = self._cyc_edges
        for gid in self._alive_gids(idx):
            ell = int(self._cyc_len[gid])
            row = edges[gid]
            for c in range(ell):
                if row[c] == idx:
                    partners.add(int(row[(c - 1) % ell]))
                    partners.add(int(row[(c + 1) % ell]))
        return {self.edge_pairs[p] for p in partners}

    def nonadjacent_pairs(self, e: Edge) -> dict[Edge, tuple[int, int]]:
        """For each non-vertex-sharing partner: (aligned, unaligned) counts."""
        idx = self._index(e)
        acc: dict[int, list[int]] = {}
        for gid in self._alive_gids(idx):
            ell = int(self._cyc_len[gid])
            row = self._cyc_edges[gid]
            sen = self._cyc_sense[gid]
            pos = 0
            for c in range(ell):
                if row[c] == idx:
                    pos = c
                    break
            for c1, c2 in _NONADJ_POS[ell]:
                if c1 == pos or c2 == pos:
                    other = c2 if c1 == pos else c1
                    cell = acc.setdefault(int(row[other]), [0, 0])
                    if sen[c1] * sen[c2] > 0:
                        cell[0] += 1
                    else:
                        cell[1] += 1
        return {self.edge_pairs[p]: (a, u) for p, (a, u) in acc.items()}

    def aggregates(self, e: Edge) -> tuple[int, int, int]:
        """(cycles through e, partners sharing a cycle, sum |aligned - unaligned|)."""
        idx = self._index(e)
        return int(self._diag[idx]), int(self._mcnt[idx]), int(self._nsum[idx])

    def aggregate_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """(diag, shared-count, nonadjacent-sum, edge-alive) in edge-index order."""
        return self._diag, self._mcnt, self._nsum, self._edge_alive

    def dump_cycles_json(self) -> str:
        """Alive cycles as JSON (canonical vertex sequences), for fixtures."""
        return json.dumps([list(c) for c in self.cycles()])

    # -- deletion ----------------------------------------------------------

    def _delete_in_place(self, e: Edge) -> list[int]:
        """Remove e and every cycle through it; return affected edge indices."""
        idx = self._index(e)
        m = self._m
        dead = self._alive_gids(idx)
        affected: set[int] = set()
        adj_dec: dict[int, int] = {}
        na_dec: dict[int, list[int]] = {}
        for gid in dead:
            self._alive[gid] = False
            ell = int(self._cyc_len[gid])
            row = self._cyc_edges[gid]
            sen = self._cyc_sense[gid]
            for c in range(ell):
                x = int(row[c])
                self._diag[x] -= 1
                affected.add(x)
                y = int(row[(c + 1) % ell])
                key = (x * m + y) if x < y else (y * m + x)
                adj_dec[key] = adj_dec.get(key, 0) + 1
            for c1, c2 in _NONADJ_POS[ell]:
                x, y = int(row[c1]), int(row[c2])
                key = (x * m + y) if x < y else (y * m + x)
                cell = na_dec.setdefault(key, [0, 0])
                cell[0] += 1
                cell[1] += int(sen[c1]) * int(sen[c2])
        for key, dec in adj_dec.items():
            pos = int(np.searchsorted(self._adj_keys, key))
            self._adj_cnt[pos] -= dec
            if self._adj_cnt[pos] == 0:
                self._mcnt[key // m] -= 1
                self._mcnt[key % m] -= 1
        for key, (cnt_dec, sgn_dec) in na_dec.items():
            pos = int(np.searchsorted(self._na_keys, key))
            old = int(self._na_sgn[pos])
            new = old - sgn_dec
            self._na_sgn[pos] = new
            self._na_cnt[pos] -= cnt_dec
            delta = abs(new) - abs(old)
            if delta:
                self._nsum[key // m] += delta
                self._nsum[key % m] += delta
        self._edge_alive[idx] = False
        affected.discard(idx)
        return sorted(affected)


def build_census(g: Graph, max_len: int) -> CycleCensus:
    """Index all cycles of length 3..max_len and reduce them per edge."""
    return CycleCensus(g, enumerate_cycles(g, max_len), max_len)


def delete_edge_from_census(
    census: CycleCensus, e: Edge
) -> tuple[CycleCensus, set[Edge]]:
    """Census for the graph minus e, plus the edges whose aggregates changed.

    The affected set is the union of the member edges of every cycle that
    contained e, minus e itself. The result equals a fresh build on the
    edge-deleted graph.
    """
    new = census._copy()
    affected = new._delete_in_place(e)
    return new, {census.edge_pairs[i] for i in affected}
