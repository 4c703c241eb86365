"""Geodesics on the regular tetrahedron and cube."""

from ._core import (
    OnBoundary,
    VertexHit,
    child_edges,
    compose,
    decompose,
    edge_labels,
    endpoint_vertex,
    limiting_vertex_frequencies,
    locate,
    orientation_of,
    patch_survey,
    region_of,
    tetra_geodesics,
    tree_json,
    tumble_sequence,
    tumble_sequence_of_segment,
    verify,
    vertex_frequencies_at_depth,
    visible_from,
)

__all__ = [
    "OnBoundary",
    "VertexHit",
    "child_edges",
    "compose",
    "decompose",
    "edge_labels",
    "endpoint_vertex",
    "limiting_vertex_frequencies",
    "locate",
    "orientation_of",
    "patch_survey",
    "region_of",
    "tetra_geodesics",
    "tree_json",
    "tumble_sequence",
    "tumble_sequence_of_segment",
    "verify",
    "vertex_frequencies_at_depth",
    "visible_from",
]
