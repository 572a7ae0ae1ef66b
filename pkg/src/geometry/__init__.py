"""
Planar geometry primitives shared by the solvers

This package provides:
- Point, Triangle and the side / vertex labels
- triangle construction, validation and classification
- the PolygonSolution and SquareTriple result types
"""

from .core import (
    EPS_ANGLE,
    EPS_AREA,
    EPS_GEOM,
    Point,
    SideId,
    Triangle,
    TriangleClass,
    TriangleKind,
    Vertex,
    angle_at,
    angles,
    base_angles,
    classify,
    height,
    height_sum,
    make_triangle,
    sorted_sides,
    triangle_from_angles,
)
from .shapes import PolygonKind, PolygonSolution, SquareKind, SquareTriple, polygon_area
