"""Simple undirected graphs with canonical vertex and edge orderings.

Vertices are arbitrary non-negative integers (not required to be dense).
Edges are unordered pairs stored as (min(u, v), max(u, v)) and listed in
lexicographic order, so every graph has one canonical edge sequence.
Graphs are immutable after construction; edge deletion returns a new value.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import IO, Iterable

import numpy as np
import scipy.sparse as sp

Edge = tuple[int, int]


class EdgeListError(ValueError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class MissingEdgeError(ValueError):
    """An operation referenced an edge that is not in the graph."""


def canon_edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to the canonical (min, max) form."""
    return (u, v) if u <= v else (v, u)


class Graph:
    """Immutable simple undirected graph.

    Construction normalizes the input: edge duplicates are collapsed,
    pairs are ordered, and the vertex set is the union of all endpoints
    and any explicitly declared vertices. Self-loops are rejected.
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_vindex", "_eindex", "_csr_cache")

    def __init__(self, edges: Iterable[Edge] = (), vertices: Iterable[int] = ()):
        vset = set(vertices)
        eset = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u < 0 or v < 0:
                raise ValueError(f"negative vertex id in edge ({u}, {v})")
            eset.add(canon_edge(u, v))
            vset.add(u)
            vset.add(v)
        if any(v < 0 for v in vset):
            raise ValueError("negative vertex id")
        self._vertices: tuple[int, ...] = tuple(sorted(vset))
        self._edges: tuple[Edge, ...] = tuple(sorted(eset))
        adj: dict[int, list[int]] = {v: [] for v in self._vertices}
        for u, v in self._edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj: dict[int, tuple[int, ...]] = {
            v: tuple(sorted(ns)) for v, ns in adj.items()
        }
        self._vindex: dict[int, int] = {v: i for i, v in enumerate(self._vertices)}
        self._eindex: dict[Edge, int] = {e: i for i, e in enumerate(self._edges)}
        self._csr_cache: sp.csr_matrix | None = None

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return canon_edge(u, v) in self._eindex

    def edge_index(self, e: Edge) -> int:
        """Position of e in the canonical lexicographic edge order."""
        try:
            return self._eindex[canon_edge(*e)]
        except KeyError:
            raise MissingEdgeError(f"edge {e} not in graph") from None

    def vertex_index(self, v: int) -> int:
        """Dense 0-based index of v in the sorted vertex order."""
        return self._vindex[v]

    def adjacency_csr(self) -> sp.csr_matrix:
        """Dense-indexed sparse adjacency matrix (cached)."""
        if self._csr_cache is None:
            n = self.num_vertices
            if self.num_edges:
                rows = []
                cols = []
                for u, v in self._edges:
                    iu, iv = self._vindex[u], self._vindex[v]
                    rows.append(iu)
                    cols.append(iv)
                    rows.append(iv)
                    cols.append(iu)
                data = np.ones(len(rows), dtype=np.int8)
                m = sp.csr_matrix((data, (rows, cols)), shape=(n, n))
            else:
                m = sp.csr_matrix((n, n), dtype=np.int8)
            self._csr_cache = m
        return self._csr_cache

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph(|V|={self.num_vertices}, |E|={self.num_edges})"


@dataclass(frozen=True)
class Partition:
    """Assignment of every vertex to a community label.

    Labels are contiguous integers starting at 0, renumbered by the order
    of each community's smallest member vertex.
    """

    labels: dict[int, int]

    @staticmethod
    def from_labels(raw: dict[int, int]) -> "Partition":
        """Normalize arbitrary integer labels to the canonical contiguous form."""
        order: dict[int, int] = {}
        for v in sorted(raw):
            lab = raw[v]
            if lab not in order:
                order[lab] = len(order)
        return Partition({v: order[raw[v]] for v in sorted(raw)})

    @property
    def num_communities(self) -> int:
        return len(set(self.labels.values())) if self.labels else 0

    def community_sets(self) -> list[frozenset[int]]:
        groups: dict[int, set[int]] = {}
        for v, lab in self.labels.items():
            groups.setdefault(lab, set()).add(v)
        return [frozenset(groups[lab]) for lab in sorted(groups)]

    def is_within(self, u: int, v: int) -> bool:
        return self.labels[u] == self.labels[v]

    def validate(self) -> None:
        labs = set(self.labels.values())
        if labs and labs != set(range(len(labs))):
            raise ValueError("labels must be contiguous integers starting at 0")


# -- edge-list and label I/O ----------------------------------------------


def _iter_lines(text: str | IO[str]) -> Iterable[tuple[int, str]]:
    if hasattr(text, "read"):
        text = text.read()
    for i, raw in enumerate(str(text).split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        yield i, line


def parse_edge_list(text: str | IO[str]) -> Graph:
    """Parse whitespace-separated edge-list text into a Graph.

    Each non-comment line holds either two vertex ids (an edge) or a single
    vertex id (an isolated-vertex declaration). Duplicate edges collapse;
    '#' starts a comment line; both LF and CRLF line endings are accepted.
    """
    edges: list[Edge] = []
    vertices: list[int] = []
    for line_no, line in _iter_lines(text):
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise EdgeListError(f"non-integer token in {line!r}", line_no) from None
        if any(x < 0 for x in nums):
            raise EdgeListError(f"negative vertex id in {line!r}", line_no)
        if len(nums) == 1:
            vertices.append(nums[0])
        elif len(nums) == 2:
            u, v = nums
            if u == v:
                raise EdgeListError(f"self-loop at vertex {u}", line_no)
            edges.append((u, v))
        else:
            raise EdgeListError(f"expected 1 or 2 integers, got {len(nums)}", line_no)
    return Graph(edges=edges, vertices=vertices)


def write_edge_list(g: Graph) -> str:
    """Canonical edge-list text: sorted edges, then isolated vertices."""
    lines = [f"{u} {v}" for u, v in g.edges]
    lines += [str(v) for v in g.vertices if g.degree(v) == 0]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_labels(text: str | IO[str]) -> Partition:
    """Parse "vertex label" lines into a normalized Partition."""
    raw: dict[int, int] = {}
    for line_no, line in _iter_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected 'vertex label', got {line!r}", line_no)
        try:
            v, lab = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer token in {line!r}", line_no) from None
        raw[v] = lab
    return Partition.from_labels(raw)


def write_labels(p: Partition) -> str:
    lines = [f"{v} {p.labels[v]}" for v in sorted(p.labels)]
    return "\n".join(lines) + ("\n" if lines else "")


# -- structural operations -------------------------------------------------


def remove_edge(g: Graph, e: Edge) -> Graph:
    """Return g without edge e; vertices (including newly isolated) are kept."""
    e = canon_edge(*e)
    if e not in g._eindex:
        raise MissingEdgeError(f"edge {e} not in graph")
    return Graph(edges=(f for f in g.edges if f != e), vertices=g.vertices)


def connected_components(g: Graph) -> Partition:
    """Label vertices by connected component, 0..k-1 by smallest member."""
    labels: dict[int, int] = {}
    next_label = 0
    for start in g.vertices:
        if start in labels:
            continue
        labels[start] = next_label
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in labels:
                    labels[w] = next_label
                    queue.append(w)
        next_label += 1
    return Partition(labels)


def bfs_distances(
    g: Graph, sources: Iterable[int], radius: int
) -> dict[tuple[int, int], int]:
    """Exact hop distances from each source, omitting pairs beyond radius."""
    out: dict[tuple[int, int], int] = {}
    for s in sources:
        if not g.has_vertex(s):
            raise ValueError(f"source vertex {s} not in graph")
        dist = {s: 0}
        out[(s, s)] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du >= radius:
                continue
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = du + 1
                    out[(s, w)] = du + 1
                    queue.append(w)
    return out
