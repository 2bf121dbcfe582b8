"""Forman-Ricci curvature and its cycle-augmented variants.

The plain curvature of an edge (v1, v2) in a simple unweighted graph is

    4 - deg(v1) - deg(v2).

Filling short cycles with faces augments it. With per-edge cycle
aggregates (see cycles.CycleCensus) the augmented value of e is

    frc(e) - #cycles(e)
           + 2 * #{vertex-sharing partners co-occurring with e in a cycle}
           - sum over non-sharing partners of |aligned - unaligned|,

which equals the direct face-counting formula

    2 + #cycles(e)
      - sum over vertex-sharing e' of |co-occurrences(e, e') - 1|
      - sum over non-sharing e' of |aligned - unaligned|

because every cycle through e contributes exactly two vertex-sharing
member edges. Both forms are integers; on acyclic graphs they reduce to
the plain curvature.
"""

from __future__ import annotations

from .cycles import CycleCensus, build_census
from .graphs import Edge, Graph, canon_edge
from .vectors import CurvatureVector


def frc(g: Graph, e: Edge) -> int:
    """Plain Forman curvature 4 - deg(v1) - deg(v2)."""
    u, v = canon_edge(*e)
    if not g.has_edge(u, v):
        raise ValueError(f"edge {(u, v)} not in graph")
    return 4 - g.degree(u) - g.degree(v)


def frc_all(g: Graph) -> CurvatureVector:
    return CurvatureVector(
        "FRC", {(u, v): float(4 - g.degree(u) - g.degree(v)) for u, v in g.edges}
    )


def _check_census(g: Graph, census: CycleCensus) -> None:
    # identity check first: the common case is a census built from g itself
    if census.edge_pairs is not g.edges and tuple(census.edges()) != g.edges:
        raise ValueError("census does not match graph edge set")


def afrc(g: Graph, census: CycleCensus, e: Edge) -> int:
    """Augmented Forman curvature of e from a prebuilt cycle census."""
    _check_census(g, census)
    gamma, shared, nonadj = census.aggregates(e)
    return frc(g, e) - gamma + 2 * shared - nonadj


def afrc_all(g: Graph, n: int, census: CycleCensus | None = None) -> CurvatureVector:
    """Augmented Forman curvature for every edge, cycles up to length n."""
    if n not in (3, 4, 5):
        raise ValueError(f"cycle length cap must be 3, 4 or 5, got {n}")
    if census is None:
        census = build_census(g, n)
    else:
        _check_census(g, census)
        if census.max_len != n:
            raise ValueError(
                f"census was built with max_len={census.max_len}, expected {n}"
            )
    diag, mcnt, nsum, alive = census.aggregate_arrays()
    values: dict[Edge, float] = {}
    for i, (u, v) in enumerate(census.edge_pairs):
        if alive[i]:
            base = 4 - g.degree(u) - g.degree(v)
            values[(u, v)] = float(base - diag[i] + 2 * mcnt[i] - nsum[i])
    return CurvatureVector(f"AFRC{n}", values)
