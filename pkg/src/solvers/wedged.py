"""
Wedged squares and rectangles at an obtuse vertex

Nothing can be inscribed on a side with an obtuse base angle, so the
polygon is instead wedged into the obtuse corner: one vertex sits on the
obtuse vertex, one side runs along the base, and the vertex opposite the
corner touches the far side. theta is always the angle at the other end of
the base.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

from src.geometry.core import (
    EPS_ANGLE,
    RIGHT_ANGLE,
    SideId,
    Triangle,
    TriangleKind,
    Vertex,
    angle_at,
    classify,
    height,
    is_obtuse_angle,
)
from src.geometry.errors import (
    BaseNotAdjacent,
    NotObtuse,
    NotObtuseAtVertex,
    NotObtuseOnBase,
    OutOfRange,
    SidesNotSorted,
)
from src.geometry.shapes import PolygonKind, PolygonSolution, SquareKind, SquareTriple, line_intersection
from src.solvers.inscribed import construct_inscribed_square, inscribed_square_side, max_rectangle_on

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WedgeParams:
    """
    A wedged rectangle on a base of length b

    theta is the far base angle, e the signed offset of F from the
    midpoint of the base, and w the rectangle height (b/2 - e) * tan(theta).
    """
    b: float
    theta: float
    e: float = 0.0

    def __post_init__(self):
        _check_wedge(self.b, self.theta)
        if abs(self.e) > self.b / 2 * (1 + 1e-12):
            raise OutOfRange(f"Offset e must satisfy |e| <= b/2 = {self.b / 2}, got {self.e}")

    @property
    def length(self):
        return self.b / 2 + self.e

    @property
    def w(self):
        return (self.b / 2 - self.e) * math.tan(self.theta)

    @property
    def area(self):
        return self.length * self.w


def _check_wedge(b: float, theta: float):
    if not b > 0:
        raise OutOfRange(f"Base length must be positive, got {b}")
    if not 0 < theta < RIGHT_ANGLE:
        raise OutOfRange(f"theta must lie strictly between 0 and pi/2, got {theta}")


def _wedge_frame(t: Triangle, corner: Vertex, base: SideId):
    """(corner O, far base vertex Q, third vertex R, unit u along OQ, inward normal n)"""
    base = SideId(base)
    ends = base.endpoints
    q_vertex = ends[1] if ends[0] == corner else ends[0]
    o, q = t.vertex(corner), t.vertex(q_vertex)
    r = t.vertex(base.opposite)
    return o, q, r, (q - o).unit(), t.inward_normal(base), q_vertex


# === Squares ===

def wedged_square_side(b: float, theta: float) -> float:
    """
    Side of the wedged square on base b: b*sin(theta)/(sin(theta) + cos(theta))

    Equivalently the s with s/(b - s) = tan(theta).

    Raises:
        OutOfRange: if b <= 0 or theta is outside (0, pi/2)
    """
    _check_wedge(b, theta)
    return b * math.sin(theta) / (math.sin(theta) + math.cos(theta))


def construct_wedged_square(t: Triangle, obtuse_vertex: Vertex, base: SideId) -> PolygonSolution:
    """
    Build the wedged square in the corner at `obtuse_vertex` on `base`

    A 45 degree ray from the corner meets the far side at D, the diagonal
    corner of the square. Vertices are returned as (corner, point on base,
    D, point on the perpendicular). A right corner is accepted too: there
    the wedged square is the inscribed square at the right angle.

    Raises:
        NotObtuseAtVertex: if the angle at the vertex is acute
        BaseNotAdjacent: if `base` does not meet the vertex
    """
    corner, base = Vertex(obtuse_vertex), SideId(base)
    if corner not in base.endpoints:
        raise BaseNotAdjacent(f"Side {base.value} does not meet vertex {corner.value}")
    if angle_at(t, corner) < RIGHT_ANGLE - EPS_ANGLE:
        raise NotObtuseAtVertex(
            f"Angle at {corner.value} is {math.degrees(angle_at(t, corner)):.6f} degrees, not obtuse"
        )

    o, q, r, u, n, q_vertex = _wedge_frame(t, corner, base)
    d = line_intersection(o, u + n, q, r - q)
    s = (d - o).dot(u)
    theta = angle_at(t, q_vertex)
    logger.debug("Wedged square at %s on side %s: s = %.12g", corner.value, base.value, s)
    return PolygonSolution(
        kind=PolygonKind.WEDGED_SQUARE,
        vertices=(o, o + u * s, d, o + n * s),
        bases=(base,),
        area=s * s,
        params={"s": s, "b": t.side_length(base), "theta": theta},
        anchor=corner,
    )


# === Rectangles ===

def wedged_rectangle_area(b: float, theta: float, e: float) -> float:
    """
    Area (b/2 + e)(b/2 - e) tan(theta) of the wedged rectangle offset by e

    Largest at e = 0, where it is (b**2/4) tan(theta).

    Raises:
        OutOfRange: if |e| > b/2 or (b, theta) is out of range
    """
    return WedgeParams(b, theta, e).area


def _obtuse_end(t: Triangle, base: SideId) -> Vertex:
    for v in SideId(base).endpoints:
        if is_obtuse_angle(angle_at(t, v)):
            return v
    raise NotObtuseOnBase(f"Side {SideId(base).value} has no obtuse base angle")


def wedged_rectangle(t: Triangle, base: SideId, e: float = 0.0) -> PolygonSolution:
    """
    The wedged rectangle on `base` whose side along the base is b/2 + e

    The corner sits on the obtuse base vertex O, F on the base at distance
    b/2 + e from O, E on the far side straight above F, and D completes the
    rectangle on the perpendicular at O.

    Raises:
        NotObtuseOnBase: if neither base angle is obtuse
        OutOfRange: if |e| > b/2
    """
    base = SideId(base)
    corner = _obtuse_end(t, base)
    o, q, r, u, n, q_vertex = _wedge_frame(t, corner, base)
    wedge = WedgeParams(t.side_length(base), angle_at(t, q_vertex), e)
    f = o + u * wedge.length
    top = line_intersection(f, n, q, r - q)
    d = o + (top - f)
    return PolygonSolution(
        kind=PolygonKind.WEDGED_RECTANGLE,
        vertices=(o, f, top, d),
        bases=(base,),
        area=wedge.area,
        params={"b": wedge.b, "theta": wedge.theta, "e": wedge.e, "w": wedge.w},
        anchor=corner,
    )


def max_wedged_rectangle(t: Triangle, base: SideId) -> PolygonSolution:
    """
    The maximal wedged rectangle on `base`: F at the midpoint, area (b**2/4) tan(theta)

    Raises:
        NotObtuseOnBase: if neither base angle is obtuse
    """
    return wedged_rectangle(t, base, 0.0)


@dataclass(frozen=True)
class WedgedOrdering:
    """
    Maximal rectangle areas on sides a, b, c of a triangle obtuse at A

    On a the rectangle is the ordinary inscribed one (both base angles are
    acute); on b and c it is wedged into A.
    """
    areas: Tuple[float, float, float]
    solutions: Tuple[PolygonSolution, PolygonSolution, PolygonSolution]

    @property
    def non_increasing(self) -> bool:
        a, b, c = self.areas
        slack = 1e-12 * a
        return a >= b - slack and b >= c - slack


def wedged_ordering_check(t: Triangle) -> WedgedOrdering:
    """
    Areas of the maximal rectangles on a, b, c for a triangle obtuse at A

    The longest side carries the largest rectangle, unlike squares.

    Raises:
        NotObtuse: if the triangle is not obtuse
        SidesNotSorted: unless a > b >= c (the obtuse angle must be at A)
    """
    cls = classify(t)
    if cls.kind is not TriangleKind.OBTUSE:
        raise NotObtuse(f"Triangle is {cls}, expected an obtuse triangle")
    if cls.vertex is not Vertex.A:
        raise SidesNotSorted(f"Obtuse angle is at {cls.vertex.value}; relabel so it sits at A")
    if t.b < t.c - t.eps_geom:
        raise SidesNotSorted(f"Expected b >= c, got b={t.b}, c={t.c}")

    solutions = (max_rectangle_on(t, SideId.a), max_wedged_rectangle(t, SideId.b), max_wedged_rectangle(t, SideId.c))
    return WedgedOrdering(tuple(s.area for s in solutions), solutions)


def wedged_rect_vs_square_gap(b: float, theta: float) -> float:
    """
    (b**2/4) tan(theta) - s**2 for the wedged square side s on the same base

    Never negative; zero only at theta = pi/4.

    Raises:
        OutOfRange: if b <= 0 or theta is outside (0, pi/2)
    """
    s = wedged_square_side(b, theta)
    return b * b / 4 * math.tan(theta) - s * s


# === Unified dispatcher ===

def enclosed_square(t: Triangle, side: SideId) -> Tuple[float, SquareKind]:
    """
    The enclosed square on one side and how it sits

    Inscribed when both base angles are non-obtuse, otherwise wedged into
    the obtuse base vertex with theta taken at the other base vertex.
    """
    side = SideId(side)
    p, q = side.endpoints
    angle_p, angle_q = angle_at(t, p), angle_at(t, q)
    length = t.side_length(side)
    if is_obtuse_angle(angle_p):
        return wedged_square_side(length, angle_q), SquareKind.WEDGED
    if is_obtuse_angle(angle_q):
        return wedged_square_side(length, angle_p), SquareKind.WEDGED
    return inscribed_square_side(height(t, side), length), SquareKind.INSCRIBED


def enclosed_square_triple(t: Triangle) -> SquareTriple:
    """
    The largest enclosed square on each side, inscribed or wedged

    Every triangle has three of them, whatever its class.
    """
    (s_a, k_a), (s_b, k_b), (s_c, k_c) = (enclosed_square(t, s) for s in SideId)
    return SquareTriple(s_a, s_b, s_c, k_a, k_b, k_c)


def enclosed_square_polygon(t: Triangle, side: SideId) -> PolygonSolution:
    """The enclosed square on one side as a polygon, inscribed or wedged"""
    side = SideId(side)
    for v in side.endpoints:
        if is_obtuse_angle(angle_at(t, v)):
            return construct_wedged_square(t, v, side)
    return construct_inscribed_square(t, side)
