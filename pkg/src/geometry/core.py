"""
Planar primitives and triangle bookkeeping

Every solver in this package works on the Triangle defined here. Vertex
labels are never reordered: side a is always BC, b is CA and c is AB,
exactly as in the usual triangle figures. Sorting sides is a separate,
explicit query (sorted_sides).
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .errors import DegenerateTriangle, InvalidAngles, NonFiniteCoordinate, NonPositiveInput

# Scale-relative tolerances. EPS_AREA and EPS_GEOM are multiplied by the
# squared / plain longest side of the triangle in question.
EPS_AREA = 1e-12
EPS_ANGLE = 1e-9
EPS_GEOM = 1e-9

RIGHT_ANGLE = math.pi / 2


@dataclass(frozen=True)
class Point:
    """A point (or free vector) in the plane"""
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFiniteCoordinate(f"Point coordinates must be finite, got ({self.x}, {self.y})")

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k):
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def dot(self, other):
        return self.x * other.x + self.y * other.y

    def cross(self, other):
        return self.x * other.y - self.y * other.x

    def norm(self):
        return math.hypot(self.x, self.y)

    def unit(self):
        n = self.norm()
        return Point(self.x / n, self.y / n)

    def perp(self):
        """Rotate by +90 degrees"""
        return Point(-self.y, self.x)

    def distance(self, other):
        return (self - other).norm()

    def midpoint(self, other):
        return Point((self.x + other.x) / 2, (self.y + other.y) / 2)

    def lerp(self, other, t):
        return Point(self.x + (other.x - self.x) * t, self.y + (other.y - self.y) * t)

    def as_tuple(self):
        return (self.x, self.y)


class Vertex(str, Enum):
    A = "A"
    B = "B"
    C = "C"


class SideId(str, Enum):
    """Sides named after the opposite vertex: a = BC, b = CA, c = AB"""
    a = "a"
    b = "b"
    c = "c"

    @property
    def endpoints(self) -> Tuple[Vertex, Vertex]:
        return _SIDE_ENDPOINTS[self]

    @property
    def opposite(self) -> Vertex:
        return Vertex(self.value.upper())

    @classmethod
    def between(cls, v1: Vertex, v2: Vertex) -> "SideId":
        for side, ends in _SIDE_ENDPOINTS.items():
            if set(ends) == {v1, v2}:
                return side
        raise ValueError(f"No side joins {v1.value} and {v2.value}")

    @classmethod
    def adjacent_to(cls, v: Vertex) -> Tuple["SideId", "SideId"]:
        return tuple(s for s in cls if v in _SIDE_ENDPOINTS[s])


_SIDE_ENDPOINTS = {
    SideId.a: (Vertex.B, Vertex.C),
    SideId.b: (Vertex.C, Vertex.A),
    SideId.c: (Vertex.A, Vertex.B),
}


class TriangleKind(str, Enum):
    ACUTE = "acute"
    RIGHT = "right"
    OBTUSE = "obtuse"


@dataclass(frozen=True)
class TriangleClass:
    """Acute / right / obtuse, plus the vertex carrying the non-acute angle"""
    kind: TriangleKind
    vertex: Optional[Vertex] = None

    def __str__(self):
        if self.vertex is None:
            return self.kind.value
        return f"{self.kind.value}@{self.vertex.value}"


@dataclass(frozen=True)
class Triangle:
    """
    A validated, non-degenerate triangle

    Build it with make_triangle or triangle_from_angles rather than
    directly. orientation is +1 when A, B, C wind counterclockwise and -1
    otherwise; labels are kept as given.
    """
    A: Point
    B: Point
    C: Point
    orientation: int = 1

    def vertex(self, v: Vertex) -> Point:
        return getattr(self, Vertex(v).value)

    def side_points(self, side: SideId) -> Tuple[Point, Point]:
        p, q = SideId(side).endpoints
        return self.vertex(p), self.vertex(q)

    def side_length(self, side: SideId) -> float:
        p, q = self.side_points(side)
        return p.distance(q)

    @property
    def a(self):
        return self.B.distance(self.C)

    @property
    def b(self):
        return self.C.distance(self.A)

    @property
    def c(self):
        return self.A.distance(self.B)

    def sides(self) -> Tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def longest_side_length(self):
        return max(self.sides())

    def twice_signed_area(self):
        return (self.B - self.A).cross(self.C - self.A)

    @property
    def area(self):
        return abs(self.twice_signed_area()) / 2

    @property
    def eps_geom(self):
        return EPS_GEOM * self.longest_side_length()

    def inward_normal(self, side: SideId) -> Point:
        """Unit normal of a side pointing into the triangle"""
        p, q = self.side_points(side)
        n = (q - p).unit().perp()
        apex = self.vertex(SideId(side).opposite)
        return n if (apex - p).dot(n) > 0 else n * -1

    def vertices(self) -> Tuple[Point, Point, Point]:
        return (self.A, self.B, self.C)


def _twice_area_tolerance(A, B, C):
    longest = max(A.distance(B), B.distance(C), C.distance(A))
    return EPS_AREA * longest * longest


def make_triangle(A: Point, B: Point, C: Point) -> Triangle:
    """
    Validate three points and build a Triangle

    Args:
        A, B, C (Point): vertices; labels are kept as given

    Returns:
        Triangle: with its winding recorded in `orientation`

    Raises:
        DegenerateTriangle: if twice the area is within the scale-relative
            tolerance of zero (collinear or coincident points)
    """
    A, B, C = (p if isinstance(p, Point) else Point(*p) for p in (A, B, C))
    twice = (B - A).cross(C - A)
    if abs(twice) <= _twice_area_tolerance(A, B, C):
        raise DegenerateTriangle(
            f"Points ({A.x}, {A.y}), ({B.x}, {B.y}), ({C.x}, {C.y}) do not span a triangle"
        )
    return Triangle(A, B, C, 1 if twice > 0 else -1)


def triangle_from_angles(alpha: float, beta: float, base_len: float, side: SideId = SideId.c) -> Triangle:
    """
    Build a triangle from two angles (degrees) and the side between them

    With the default side c the angles are placed at A and B; for side a at
    B and C; for side b at C and A. The side lies on the x axis and the
    apex is found by intersecting the two rays, so the result winds
    counterclockwise.

    Raises:
        InvalidAngles: if an angle is not positive or the two sum to 180 or more
        NonPositiveInput: if base_len is not positive
    """
    if not (alpha > 0 and beta > 0 and alpha + beta < 180):
        raise InvalidAngles(f"Angles must be positive with sum below 180, got {alpha} and {beta}")
    if not base_len > 0:
        raise NonPositiveInput(f"Side length must be positive, got {base_len}")

    ra, rb = math.radians(alpha), math.radians(beta)
    p = Point(0.0, 0.0)
    q = Point(float(base_len), 0.0)
    # Law of sines for the distance from p to the apex
    gamma = math.pi - ra - rb
    dist_p = base_len * math.sin(rb) / math.sin(gamma)
    apex = Point(dist_p * math.cos(ra), dist_p * math.sin(ra))

    first, second = SideId(side).endpoints
    points = {first: p, second: q, SideId(side).opposite: apex}
    return make_triangle(points[Vertex.A], points[Vertex.B], points[Vertex.C])


def angle_at(t: Triangle, v: Vertex) -> float:
    """Interior angle at a vertex, in radians"""
    v = Vertex(v)
    others = [w for w in Vertex if w != v]
    origin = t.vertex(v)
    u = t.vertex(others[0]) - origin
    w = t.vertex(others[1]) - origin
    return math.atan2(abs(u.cross(w)), u.dot(w))


def angles(t: Triangle) -> Tuple[float, float, float]:
    return tuple(angle_at(t, v) for v in Vertex)


def classify(t: Triangle) -> TriangleClass:
    """
    Classify a triangle by its largest angle

    An angle within EPS_ANGLE of a right angle counts as right, so the
    right-triangle cases are reachable from rounded input.
    """
    largest = max(Vertex, key=lambda v: angle_at(t, v))
    theta = angle_at(t, largest)
    if abs(theta - RIGHT_ANGLE) <= EPS_ANGLE:
        return TriangleClass(TriangleKind.RIGHT, largest)
    if theta > RIGHT_ANGLE:
        return TriangleClass(TriangleKind.OBTUSE, largest)
    return TriangleClass(TriangleKind.ACUTE)


def is_obtuse_angle(theta: float) -> bool:
    return theta > RIGHT_ANGLE + EPS_ANGLE


def height(t: Triangle, base: SideId) -> float:
    """Altitude onto a side: 2 * area / len(side)"""
    return 2 * t.area / t.side_length(base)


def height_sum(t: Triangle, side: SideId) -> float:
    """len(side) + height onto it; orders the inscribed squares"""
    return t.side_length(side) + height(t, side)


def base_angles(t: Triangle, base: SideId) -> Tuple[float, float]:
    p, q = SideId(base).endpoints
    return angle_at(t, p), angle_at(t, q)


def sorted_sides(t: Triangle):
    """Sides ordered longest first, as (SideId, length) pairs"""
    return sorted(((s, t.side_length(s)) for s in SideId), key=lambda item: -item[1])
