"""
Bruhat-Tits tree: vertices, paths, boundary coordinates, geodesics and vertex classes
"""

from src.tree.classes import vertex_class
from src.tree.dot import to_dot
from src.tree.geodesic import ParamGeodesic, flow_shift, theta, vertex_at
from src.tree.vertex import (
    Vertex,
    apartment_vertex,
    distance,
    end_truncation,
    neighbors,
    separation,
    standard_vertex,
    tree_path,
    tripod_center,
)

__all__ = [
    "Vertex",
    "apartment_vertex",
    "standard_vertex",
    "neighbors",
    "distance",
    "tree_path",
    "end_truncation",
    "separation",
    "tripod_center",
    "ParamGeodesic",
    "theta",
    "vertex_at",
    "flow_shift",
    "vertex_class",
    "to_dot",
]
