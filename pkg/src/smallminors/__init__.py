"""Small K_t-models in dense graphs: finders, embedded-graph tools, generators and oracles."""

from .dense import (
    dense_low_diameter_subgraph,
    extract_model_from_certificate,
    high_girth_dense_minor,
    high_girth_kt_model,
    nice_k3_model,
    short_cycle,
    small_k4_model,
    small_kt_model,
)
from .embedded import EmbeddedGraph, Face, visibility_wheel_k4
from .errors import FormatError, InvariantError, PreconditionError
from .graph import BfsTree, Graph, KtModel, Separation, average_degree, bfs_tree, validate_model
from .surface import (
    ChargeReport,
    blind_edge,
    charge_report,
    low_visibility_vertex,
    planar_3conn_k4,
    planar_general_k4,
    planar_short_face_cycle,
    surface_girth_cycle,
    surface_k4,
    surface_short_face,
)

__all__ = [
    "BfsTree",
    "ChargeReport",
    "EmbeddedGraph",
    "Face",
    "FormatError",
    "Graph",
    "InvariantError",
    "KtModel",
    "PreconditionError",
    "Separation",
    "average_degree",
    "bfs_tree",
    "blind_edge",
    "charge_report",
    "dense_low_diameter_subgraph",
    "extract_model_from_certificate",
    "high_girth_dense_minor",
    "high_girth_kt_model",
    "low_visibility_vertex",
    "nice_k3_model",
    "planar_3conn_k4",
    "planar_general_k4",
    "planar_short_face_cycle",
    "short_cycle",
    "small_k4_model",
    "small_kt_model",
    "surface_girth_cycle",
    "surface_k4",
    "surface_short_face",
    "validate_model",
]
