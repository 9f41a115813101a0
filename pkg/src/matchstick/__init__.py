"""Validation, analysis and construction of matchstick graphs."""

from matchstick.geometry import (
    LatticePoint,
    PlanePoint,
    Tolerance,
    is_unit_length,
    lattice_to_cartesian,
    segments_properly_cross,
)
from matchstick.planegraph import (
    BlockDecomposition,
    BoundaryProfile,
    EmbeddedGraph,
    FaceReport,
    MatchstickGraph,
    angle_sum_check,
    blocks,
    boundary_peel,
    boundary_profile,
    double_count_check,
    euler_check,
    extract_faces,
    inequality_two_check,
    isoperimetric_check,
    validate,
)
from matchstick.bounds import (
    BoundsReport,
    ceil_isqrt,
    conjectured_max_edges,
    cor1_max_triangles,
    full_report,
    lemma_sqrt2_check,
    lemma_sqrt_check,
    settled_list,
    thm1_check,
    thm3_max_edges,
)
from matchstick.construct import extremality_audit, penny_graph_of, spiral_points
from matchstick.search import SearchConfig, lattice_max_edges

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "BoundaryProfile",
    "BoundsReport",
    "EmbeddedGraph",
    "FaceReport",
    "LatticePoint",
    "MatchstickGraph",
    "PlanePoint",
    "SearchConfig",
    "Tolerance",
    "angle_sum_check",
    "blocks",
    "boundary_peel",
    "boundary_profile",
    "ceil_isqrt",
    "conjectured_max_edges",
    "cor1_max_triangles",
    "double_count_check",
    "euler_check",
    "extract_faces",
    "extremality_audit",
    "full_report",
    "inequality_two_check",
    "is_unit_length",
    "isoperimetric_check",
    "lattice_max_edges",
    "lattice_to_cartesian",
    "lemma_sqrt2_check",
    "lemma_sqrt_check",
    "penny_graph_of",
    "segments_properly_cross",
    "settled_list",
    "spiral_points",
    "thm1_check",
    "thm3_max_edges",
    "validate",
]
