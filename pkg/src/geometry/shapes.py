"""
Solved polygons and the small planar helpers the constructions need
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

from .core import Point, SideId, Triangle, Vertex


class PolygonKind(str, Enum):
    PARALLELOGRAM = "parallelogram"
    RECTANGLE = "rectangle"
    SQUARE = "square"
    WEDGED_SQUARE = "wedged_square"
    WEDGED_RECTANGLE = "wedged_rectangle"


class SquareKind(str, Enum):
    INSCRIBED = "inscribed"
    WEDGED = "wedged"
    NONE = "none"


@dataclass(frozen=True)
class PolygonSolution:
    """
    A solved maximal (or competitor) quadrilateral

    `bases` normally holds one side; a right triangle's coincident leg
    rectangle carries both legs. `anchor` is the triangle vertex the polygon
    is pinned to, when there is one (parallelograms, wedged shapes).
    """
    kind: PolygonKind
    vertices: Tuple[Point, Point, Point, Point]
    bases: Tuple[SideId, ...]
    area: float
    params: Dict[str, float] = field(default_factory=dict)
    anchor: Optional[Vertex] = None

    @property
    def base(self) -> SideId:
        return self.bases[0]

    @property
    def coincident(self) -> bool:
        return len(self.bases) > 1

    def shoelace_area(self) -> float:
        return polygon_area(self.vertices)

    def side_lengths(self):
        v = self.vertices
        return [v[i].distance(v[(i + 1) % 4]) for i in range(4)]


@dataclass(frozen=True)
class SquareTriple:
    """Side lengths of the enclosed squares on sides a, b, c"""
    s_a: float
    s_b: float
    s_c: float
    kind_a: SquareKind = SquareKind.INSCRIBED
    kind_b: SquareKind = SquareKind.INSCRIBED
    kind_c: SquareKind = SquareKind.INSCRIBED

    def side(self, side: SideId) -> float:
        return getattr(self, f"s_{SideId(side).value}")

    def kind(self, side: SideId) -> SquareKind:
        return getattr(self, f"kind_{SideId(side).value}")

    def as_tuple(self):
        return (self.s_a, self.s_b, self.s_c)


def polygon_area(points: Sequence[Point]) -> float:
    """Shoelace area (unsigned)"""
    total = 0.0
    n = len(points)
    for i in range(n):
        total += points[i].cross(points[(i + 1) % n])
    return abs(total) / 2


def line_intersection(p: Point, d: Point, q: Point, e: Point) -> Optional[Point]:
    """Intersection of the lines p + s*d and q + u*e, None if parallel"""
    denom = d.cross(e)
    if denom == 0:
        return None
    s = (q - p).cross(e) / denom
    return p + d * s


def point_segment_distance(x: Point, p: Point, q: Point) -> float:
    d = q - p
    length2 = d.dot(d)
    if length2 == 0:
        return x.distance(p)
    s = max(0.0, min(1.0, (x - p).dot(d) / length2))
    return x.distance(p + d * s)


def distance_to_boundary(t: Triangle, x: Point) -> float:
    return min(point_segment_distance(x, *t.side_points(s)) for s in SideId)


def contains(t: Triangle, x: Point, tol: float = 0.0) -> bool:
    """Closed containment with an absolute slack `tol`"""
    for s in SideId:
        p, _ = t.side_points(s)
        if (x - p).dot(t.inward_normal(s)) < -tol:
            return False
    return True


def is_rectangle(vertices: Sequence[Point], tol: float) -> bool:
    """Opposite sides equal and adjacent sides perpendicular, within tol"""
    v = vertices
    for i in range(4):
        e1 = v[(i + 1) % 4] - v[i]
        e2 = v[(i + 2) % 4] - v[(i + 1) % 4]
        if abs(e1.dot(e2)) > tol * max(e1.norm(), e2.norm(), 1e-300):
            return False
    return is_parallelogram(vertices, tol)


def is_parallelogram(vertices: Sequence[Point], tol: float) -> bool:
    v = vertices
    return (v[0] + v[2]).distance(v[1] + v[3]) <= 2 * tol


def is_square(vertices: Sequence[Point], tol: float) -> bool:
    if not is_rectangle(vertices, tol):
        return False
    lengths = [vertices[i].distance(vertices[(i + 1) % 4]) for i in range(4)]
    return max(lengths) - min(lengths) <= tol

