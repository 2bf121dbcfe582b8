"""Discrete curvature on simple undirected graphs.

Forman-Ricci curvature, its cycle-augmented variants (cycles up to length
3, 4 or 5), and exact Ollivier-Ricci curvature, together with the tools
built on top of them: seeded random graph models, curvature-gap and
correlation statistics, and community detection by sequential
curvature-driven edge deletion.
"""

from .analysis import (
    CorrelationReport,
    DegenerateGapError,
    GapReport,
    InsufficientDataError,
    ThresholdFit,
    UndefinedCorrelationError,
    curvature_gap,
    fit_two_gaussians,
    histogram,
    pearson,
)
from .cycles import (
    CycleCensus,
    aligned,
    build_census,
    canonical_cycle,
    delete_edge_from_census,
    enumerate_cycles,
)
from .detection import (
    DetectionConfig,
    DetectionResult,
    accuracy,
    detect_communities,
)
from .forman import afrc, afrc_all, frc, frc_all
from .generators import (
    ModelParams,
    bipartite_er,
    erdos_renyi,
    hbg,
    sbm,
    tree_sbm,
)
from .graphs import (
    EdgeListError,
    Graph,
    MissingEdgeError,
    Partition,
    bfs_distances,
    connected_components,
    parse_edge_list,
    parse_labels,
    remove_edge,
    write_edge_list,
    write_labels,
)
from .ollivier import (
    DiscreteMeasure,
    TransportError,
    TransportProblem,
    neighbor_measure,
    orc,
    orc_all,
    wasserstein1,
)
from .vectors import CurvatureVector

__version__ = "0.1.0"

__all__ = [
    "CorrelationReport", "CurvatureVector", "CycleCensus", "DegenerateGapError",
    "DetectionConfig", "DetectionResult", "DiscreteMeasure", "EdgeListError",
    "GapReport", "Graph", "InsufficientDataError", "MissingEdgeError",
    "ModelParams", "Partition", "ThresholdFit", "TransportError",
    "TransportProblem", "UndefinedCorrelationError", "accuracy", "afrc",
    "afrc_all", "aligned", "bfs_distances", "bipartite_er", "build_census",
    "canonical_cycle", "connected_components", "curvature_gap",
    "delete_edge_from_census", "detect_communities", "enumerate_cycles",
    "erdos_renyi", "fit_two_gaussians", "frc", "frc_all", "hbg", "histogram",
    "neighbor_measure", "orc", "orc_all", "parse_edge_list", "parse_labels",
    "pearson", "remove_edge", "sbm", "tree_sbm", "wasserstein1",
    "write_edge_list", "write_labels",
]
