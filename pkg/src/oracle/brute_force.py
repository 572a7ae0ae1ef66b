"""
Brute-force maximisers used to check the closed forms

Each oracle scans the same family of polygons the closed-form argument
ranges over, on a deterministic GridSpec, and measures the polygons with
plain coordinate geometry. They never call the closed-form solvers, so an
agreement between the two is evidence rather than a tautology.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from src.geometry.core import EPS_ANGLE, RIGHT_ANGLE, Point, SideId, Triangle, Vertex, angle_at, base_angles
from src.geometry.errors import NotObtuseOnBase, ObtuseBaseAngle
from src.geometry.shapes import PolygonKind, PolygonSolution
from .grid import GridSpec, unit_grid

logger = logging.getLogger(__name__)

DEFAULT_GRID = 2000
MIN_BISECTIONS = 60
BARYCENTRIC_SLACK = 1e-12


def _local_frame(origin: Point, towards: Point, inward: Point):
    """Unit axes (u, n) with u along origin -> towards and n pointing inside"""
    u = (towards - origin).unit()
    n = u.perp()
    if n.dot(inward - origin) < 0:
        n = n * -1
    return u, n


def _to_local(x: Point, origin: Point, u: Point, n: Point) -> Tuple[float, float]:
    d = x - origin
    return d.dot(u), d.dot(n)


def _to_world(lx: float, ly: float, origin: Point, u: Point, n: Point) -> Point:
    return origin + u * float(lx) + n * float(ly)


def _require_inscribable(t: Triangle, base: SideId):
    if any(theta > RIGHT_ANGLE + EPS_ANGLE for theta in base_angles(t, base)):
        raise ObtuseBaseAngle(f"Side {SideId(base).value} has an obtuse base angle")


def _obtuse_corner(t: Triangle, base: SideId) -> Vertex:
    for v in SideId(base).endpoints:
        if angle_at(t, v) > RIGHT_ANGLE + EPS_ANGLE:
            return v
    raise NotObtuseOnBase(f"Side {SideId(base).value} has no obtuse base angle")


# === Parallelograms ===

def brute_force_max_parallelogram(t: Triangle, g: Optional[GridSpec] = None) -> Tuple[float, PolygonSolution]:
    """
    Largest parallelogram pinned to a vertex with sides along its two sides

    For each vertex V with neighbours P, R the family is
    V, V + u(P - V), V + u(P - V) + w(R - V), V + w(R - V) over the (u, w)
    grid; a member is kept only if its free corner is inside the triangle.
    All three vertex choices are scanned.

    Returns:
        tuple: (best area, witness polygon)
    """
    g = g or unit_grid(DEFAULT_GRID, 2)
    us = g.samples(0)
    ws = g.samples(1) if len(g.bounds) > 1 else us
    best_area, best = -1.0, None
    for anchor in Vertex:
        others = [w for w in Vertex if w != anchor]
        v, p, r = t.vertex(anchor), t.vertex(others[0]), t.vertex(others[1])
        e1, e2 = p - v, r - v
        cell = abs(e1.cross(e2))
        # Free corner in barycentric terms: inside iff u + w <= 1, up to rounding
        areas = np.outer(us, ws) * cell
        areas[np.add.outer(us, ws) > 1.0 + BARYCENTRIC_SLACK] = -1.0
        i, j = np.unravel_index(np.argmax(areas), areas.shape)
        if areas[i, j] > best_area:
            u, w = float(us[i]), float(ws[j])
            best_area = float(areas[i, j])
            best = PolygonSolution(
                kind=PolygonKind.PARALLELOGRAM,
                vertices=(v, v + e1 * u, v + e1 * u + e2 * w, v + e2 * w),
                bases=(SideId.between(anchor, others[0]),),
                area=best_area,
                params={"u": u, "w": w},
                anchor=anchor,
            )
    logger.debug("Parallelogram oracle (n=%d): %.12g", g.n, best_area)
    return best_area, best


# === Rectangles ===

def _cross_section(base_len: float, apex: Tuple[float, float], y):
    """Left and right ends of the horizontal chord at height y (local frame)"""
    rx, ry = apex
    frac = y / ry
    left = rx * frac
    right = base_len + (rx - base_len) * frac
    return left, right


def brute_force_max_rectangle(t: Triangle, base: SideId, g: Optional[GridSpec] = None) -> Tuple[float, PolygonSolution]:
    """
    Largest rectangle standing on `base`, scanning the height of its top side

    Raises:
        ObtuseBaseAngle: if a base angle is obtuse
    """
    base = SideId(base)
    _require_inscribable(t, base)
    g = g or unit_grid(DEFAULT_GRID)
    p, q = t.side_points(base)
    r = t.vertex(base.opposite)
    u, n = _local_frame(p, q, r)
    base_len = p.distance(q)
    apex = _to_local(r, p, u, n)

    heights = g.samples(0) * apex[1]
    left, right = _cross_section(base_len, apex, heights)
    left = np.maximum(left, 0.0)
    right = np.minimum(right, base_len)
    areas = np.clip(right - left, 0.0, None) * heights
    k = int(np.argmax(areas))
    y, x0, x1 = float(heights[k]), float(left[k]), float(right[k])
    witness = PolygonSolution(
        kind=PolygonKind.RECTANGLE,
        vertices=tuple(_to_world(lx, ly, p, u, n) for lx, ly in ((x0, 0.0), (x1, 0.0), (x1, y), (x0, y))),
        bases=(base,),
        area=float(areas[k]),
        params={"top": y, "h": apex[1]},
    )
    return float(areas[k]), witness


def wedged_rectangle_scan(t: Triangle, base: SideId, g: Optional[GridSpec] = None):
    """
    Areas of wedged rectangles on `base` as F slides along it

    Returns:
        tuple: (obtuse corner, offsets e from the midpoint, areas, frame);
            offsets and areas are numpy arrays in increasing e, frame is
            (corner point, u, n, rectangle heights) for building witnesses

    Raises:
        NotObtuseOnBase: if neither base angle is obtuse
    """
    base = SideId(base)
    corner = _obtuse_corner(t, base)
    ends = base.endpoints
    far = ends[1] if ends[0] == corner else ends[0]
    o, q, r = t.vertex(corner), t.vertex(far), t.vertex(base.opposite)
    g = g or unit_grid(DEFAULT_GRID)
    u, n = _local_frame(o, q, r)
    b = o.distance(q)
    rx, ry = _to_local(r, o, u, n)

    lengths = g.samples(0) * b
    # Height where the perpendicular at F meets the far side QR
    tops = ry * (b - lengths) / (b - rx)
    areas = lengths * tops
    return corner, lengths - b / 2, areas, (o, u, n, tops)


def brute_force_max_wedged_rectangle(t: Triangle, base: SideId, g: Optional[GridSpec] = None) -> Tuple[float, PolygonSolution]:
    """
    Largest wedged rectangle on `base`, scanning the position of F

    Raises:
        NotObtuseOnBase: if neither base angle is obtuse
    """
    corner, offsets, areas, (o, u, n, tops) = wedged_rectangle_scan(t, base, g)
    k = int(np.argmax(areas))
    b = t.side_length(base)
    length, top = float(offsets[k] + b / 2), float(tops[k])
    witness = PolygonSolution(
        kind=PolygonKind.WEDGED_RECTANGLE,
        vertices=tuple(_to_world(lx, ly, o, u, n) for lx, ly in ((0.0, 0.0), (length, 0.0), (length, top), (0.0, top))),
        bases=(SideId(base),),
        area=float(areas[k]),
        params={"e": float(offsets[k])},
        anchor=corner,
    )
    return float(areas[k]), witness


# === Squares ===

def brute_force_inscribed_square(t: Triangle, base: SideId, g: Optional[GridSpec] = None) -> float:
    """
    Side of the inscribed square on `base` by bisection

    A square of side s fits when the chord at height s is at least s wide;
    the inscribed square is where the two are equal. The grid only sets the
    bisection budget (at least 60 halvings).

    Raises:
        ObtuseBaseAngle: if a base angle is obtuse
    """
    base = SideId(base)
    _require_inscribable(t, base)
    g = g or unit_grid(DEFAULT_GRID)
    p, q = t.side_points(base)
    r = t.vertex(base.opposite)
    u, n = _local_frame(p, q, r)
    base_len = p.distance(q)
    apex = _to_local(r, p, u, n)

    def slack(s):
        left, right = _cross_section(base_len, apex, s)
        return min(right, base_len) - max(left, 0.0) - s

    lo, hi = 0.0, min(apex[1], base_len)
    for _ in range(max(g.n, MIN_BISECTIONS)):
        mid = (lo + hi) / 2
        if slack(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-16 * base_len:
            break
    return (lo + hi) / 2
