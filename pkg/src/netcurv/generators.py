"""Seeded random graph models.

All models consume randomness from one numpy PCG64 stream in a fixed,
documented order, so (model, parameters, seed) identifies one graph on
every platform:

* erdos_renyi: one uniform per vertex pair, pairs in lexicographic order;
  a pair becomes an edge when its uniform is < p.
* bipartite_er: one uniform per cross-side pair, lexicographic order.
* sbm: one uniform per vertex pair, lexicographic order; the threshold is
  p for within-community pairs and q for between-community pairs.
* tree_sbm: for each community in order, k-2 integers in [0, k) (a Prufer
  sequence decoded into a uniform random labeled tree); then one uniform
  per within-community pair, communities in order and pairs lexicographic
  within each (draws landing on tree pairs are ignored, the tree edge is
  present regardless); finally one uniform per between-community pair in
  lexicographic order.
* hbg: one uniform per cross-side pair, lexicographic order; threshold p
  within a community and q between.

Community layouts are contiguous blocks: sbm/tree_sbm community c holds
vertices c*k .. (c+1)*k - 1; hbg community 0 is vertices 0..2n-1 and
community 1 is 2n..4n-1, with the first n vertices of each community on
one side of the global bipartition and the remaining n on the other.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, Partition


def _check_prob(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must be in [0, 1], got {value}")


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """Each of the C(n, 2) pairs independently present with probability p."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_prob("p", p)
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(iu.size) < p
    return Graph(edges=zip(iu[mask].tolist(), ju[mask].tolist()), vertices=range(n))


def bipartite_er(n: int, p: float, seed: int) -> Graph:
    """Two sides of n vertices; only cross-side pairs are sampled."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_prob("p", p)
    rng = np.random.default_rng(seed)
    iu = np.repeat(np.arange(n), n)
    ju = n + np.tile(np.arange(n), n)
    mask = rng.random(iu.size) < p
    return Graph(edges=zip(iu[mask].tolist(), ju[mask].tolist()), vertices=range(2 * n))


def sbm(l: int, k: int, p: float, q: float, seed: int) -> tuple[Graph, Partition]:
    """l communities of k vertices; edge probability p within, q between."""
    if l < 1 or k < 1:
        raise ValueError("l and k must be >= 1")
    _check_prob("p", p)
    _check_prob("q", q)
    if q > p:
        raise ValueError(f"q must not exceed p, got q={q} > p={p}")
    rng = np.random.default_rng(seed)
    n = l * k
    comm = np.arange(n) // k
    iu, ju = np.triu_indices(n, k=1)
    thresh = np.where(comm[iu] == comm[ju], p, q)
    mask = rng.random(iu.size) < thresh
    g = Graph(edges=zip(iu[mask].tolist(), ju[mask].tolist()), vertices=range(n))
    return g, Partition({v: int(comm[v]) for v in range(n)})


def _tree_from_prufer(seq: list[int], k: int) -> list[tuple[int, int]]:
    """Decode a Prufer sequence into the edges of a labeled tree on 0..k-1."""
    if k == 1:
        return []
    deg = [1] * k
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(k) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def tree_sbm(l: int, k: int, p: float, q: float, seed: int) -> tuple[Graph, Partition]:
    """Communities are uniform random labeled trees plus extra p-edges;
    between-community edges appear with probability q."""
    if l < 1 or k < 1:
        raise ValueError("l and k must be >= 1")
    _check_prob("p", p)
    _check_prob("q", q)
    rng = np.random.default_rng(seed)
    n = l * k
    comm = np.arange(n) // k
    edges: set[tuple[int, int]] = set()
    tree_edges: list[set[tuple[int, int]]] = []
    for c in range(l):
        off = c * k
        seq = rng.integers(0, k, size=max(k - 2, 0)).tolist()
        local = {(min(a, b) + off, max(a, b) + off) for a, b in _tree_from_prufer(seq, k)}
        tree_edges.append(local)
        edges.update(local)
    for c in range(l):
        off = c * k
        iu, ju = np.triu_indices(k, k=1)
        draws = rng.random(iu.size)
        for a, b, x in zip((iu + off).tolist(), (ju + off).tolist(), draws):
            if (a, b) not in tree_edges[c] and x < p:
                edges.add((a, b))
    iu, ju = np.triu_indices(n, k=1)
    between = comm[iu] != comm[ju]
    bi, bj = iu[between], ju[between]
    mask = rng.random(bi.size) < q
    edges.update(zip(bi[mask].tolist(), bj[mask].tolist()))
    g = Graph(edges=edges, vertices=range(n))
    return g, Partition({v: int(comm[v]) for v in range(n)})


def hbg(n: int, p: float, q: float, seed: int) -> tuple[Graph, Partition]:
    """Bipartite graph of 4n vertices in 2 communities straddling the sides."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_prob("p", p)
    _check_prob("q", q)
    if q > p:
        raise ValueError(f"q must not exceed p, got q={q} > p={p}")
    rng = np.random.default_rng(seed)
    total = 4 * n
    comm = np.arange(total) // (2 * n)
    side = (np.arange(total) // n) % 2
    iu, ju = np.triu_indices(total, k=1)
    cross = side[iu] != side[ju]
    ci, cj = iu[cross], ju[cross]
    thresh = np.where(comm[ci] == comm[cj], p, q)
    mask = rng.random(ci.size) < thresh
    g = Graph(edges=zip(ci[mask].tolist(), cj[mask].tolist()), vertices=range(total))
    return g, Partition({v: int(comm[v]) for v in range(total)})


@dataclass(frozen=True)
class ModelParams:
    """Validated parameter bundle for the five models, used by the CLI."""

    model: str
    n: int | None = None
    l: int | None = None
    k: int | None = None
    p: float = 0.0
    q: float | None = None
    seed: int = 0

    def __post_init__(self):
        model = self.model.upper()
        object.__setattr__(self, "model", model)
        if model not in ("ER", "BG", "SBM", "TSBM", "HBG"):
            raise ValueError(f"unknown model {self.model!r}")
        if model in ("ER", "BG", "HBG"):
            if self.n is None or self.n < 1:
                raise ValueError(f"{model} needs n >= 1")
        else:
            if self.l is None or self.k is None or self.l < 1 or self.k < 1:
                raise ValueError(f"{model} needs l >= 1 and k >= 1")
        _check_prob("p", self.p)
        if model in ("SBM", "TSBM", "HBG"):
            if self.q is None:
                raise ValueError(f"{model} needs q")
            _check_prob("q", self.q)
            if model != "TSBM" and self.q > self.p:
                raise ValueError("q must not exceed p")

    def sample(self) -> tuple[Graph, Partition | None]:
        if self.model == "ER":
            return erdos_renyi(self.n, self.p, self.seed), None
        if self.model == "BG":
            return bipartite_er(self.n, self.p, self.seed), None
        if self.model == "SBM":
            return sbm(self.l, self.k, self.p, self.q, self.seed)
        if self.model == "TSBM":
            return tree_sbm(self.l, self.k, self.p, self.q, self.seed)
        return hbg(self.n, self.p, self.q, self.seed)
