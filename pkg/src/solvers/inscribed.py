"""
Maximal inscribed parallelograms, rectangles and squares

Inscribed means every vertex of the polygon lies on a side of the
triangle. The maximal parallelogram and rectangle both have area h*a/4
(half the triangle); the inscribed square on a side has s = h*a/(h + a)
and is built here with Polya's dilation construction.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

from src.geometry.core import (
    EPS_ANGLE,
    Point,
    SideId,
    Triangle,
    TriangleKind,
    Vertex,
    base_angles,
    classify,
    height,
    RIGHT_ANGLE,
)
from src.geometry.errors import NonPositiveInput, NotAcute, ObtuseBaseAngle, OutOfRange
from src.geometry.shapes import (
    PolygonKind,
    PolygonSolution,
    SquareTriple,
    line_intersection,
    polygon_area,
)

logger = logging.getLogger(__name__)

# Where the Polya seed point sits along the side from the dilation centre.
# Any value in (0, 1) gives the same square; it is fixed for reproducibility.
POLYA_SEED_FRACTION = 0.1

# The side that follows each vertex in label order; a parallelogram
# anchored at a vertex takes this side as its base.
_NEXT_SIDE = {Vertex.A: SideId.c, Vertex.B: SideId.a, Vertex.C: SideId.b}


def _anchor_frame(t: Triangle, anchor: Vertex) -> Tuple[Point, Point, Point]:
    """(anchor, next vertex, remaining vertex) in label order"""
    order = [Vertex.A, Vertex.B, Vertex.C]
    i = order.index(Vertex(anchor))
    return t.vertex(order[i]), t.vertex(order[(i + 1) % 3]), t.vertex(order[(i + 2) % 3])


def _base_frame(t: Triangle, base: SideId) -> Tuple[Point, Point, Point]:
    """(first endpoint, second endpoint, apex) of a side"""
    p, q = t.side_points(base)
    return p, q, t.vertex(SideId(base).opposite)


def _foot(x: Point, p: Point, q: Point) -> Point:
    u = (q - p).unit()
    return p + u * (x - p).dot(u)


def _admissible(t: Triangle, base: SideId) -> bool:
    return all(theta <= RIGHT_ANGLE + EPS_ANGLE for theta in base_angles(t, base))


def _require_admissible(t: Triangle, base: SideId):
    if not _admissible(t, base):
        degrees = [round(math.degrees(th), 6) for th in base_angles(t, base)]
        raise ObtuseBaseAngle(
            f"Side {SideId(base).value} has an obtuse base angle {degrees}; nothing can be inscribed on it"
        )


# === Parallelograms ===

def max_parallelograms(t: Triangle) -> List[PolygonSolution]:
    """
    The three maximal inscribed parallelograms

    Each is pinned to one triangle vertex; its other three vertices are the
    side midpoints. All three have area (ABC)/2 = h*a/4. Ordered by anchor
    A, B, C.
    """
    solutions = []
    for anchor in Vertex:
        v, p, r = _anchor_frame(t, anchor)
        base = _NEXT_SIDE[anchor]
        vertices = (v, v.midpoint(p), p.midpoint(r), v.midpoint(r))
        h, a = height(t, base), t.side_length(base)
        solutions.append(PolygonSolution(
            kind=PolygonKind.PARALLELOGRAM,
            vertices=vertices,
            bases=(base,),
            area=h * a / 4,
            params={"h": h, "a": a},
            anchor=anchor,
        ))
    return solutions


def competitor_parallelogram(t: Triangle, x: float, anchor: Vertex = Vertex.B) -> PolygonSolution:
    """
    The competitor BGHI with G on BC, H on CA, I on AB

    x is the offset |JE| along the midline FE; the triangle HJE is similar to
    ABC so its height is y = x*h/a. With another anchor the roles rotate
    (anchor, next vertex, remaining vertex) = (B, C, A).
    """
    v, p, r = _anchor_frame(t, anchor)
    base = _NEXT_SIDE[Vertex(anchor)]
    a, h = t.side_length(base), height(t, base)
    slack = 1e-12 * a
    if x < -slack or x > a / 2 + slack:
        raise OutOfRange(f"x must lie in [0, a/2] = [0, {a / 2}], got {x}")
    x = min(max(x, 0.0), a / 2)
    y = x * h / a
    k = 0.5 + x / a
    g = v.lerp(p, 1 - k)
    hh = p.lerp(r, k)
    i = v.lerp(r, k)
    vertices = (v, g, hh, i)
    return PolygonSolution(
        kind=PolygonKind.PARALLELOGRAM,
        vertices=vertices,
        bases=(base,),
        area=polygon_area(vertices),
        params={"x": x, "y": y, "h": h, "a": a},
        anchor=Vertex(anchor),
    )


def parallelogram_identity_residual(t: Triangle, x: float, anchor: Vertex = Vertex.B) -> float:
    """
    (BDEF) - x*y - (BGHI) for the competitor at offset x

    The identity (BGHI) = (BDEF) - x*y makes this zero up to rounding; the
    competitor's area is measured with the shoelace formula, not the
    identity.

    Raises:
        OutOfRange: if x is outside [0, a/2]
    """
    competitor = competitor_parallelogram(t, x, anchor)
    h, a = competitor.params["h"], competitor.params["a"]
    return h * a / 4 - competitor.params["x"] * competitor.params["y"] - competitor.area


# === Rectangles ===

def _midline_rectangle(t: Triangle, base: SideId) -> Tuple[Point, Point, Point, Point]:
    p, q, r = _base_frame(t, base)
    m1, m2 = r.midpoint(p), r.midpoint(q)
    return (_foot(m1, p, q), _foot(m2, p, q), m2, m1)


def max_rectangle_on(t: Triangle, base: SideId) -> PolygonSolution:
    """
    The maximal inscribed rectangle with a side on `base`

    Its top side joins the midpoints of the other two sides.

    Raises:
        ObtuseBaseAngle: if a base angle is obtuse
    """
    _require_admissible(t, base)
    h, a = height(t, base), t.side_length(base)
    return PolygonSolution(
        kind=PolygonKind.RECTANGLE,
        vertices=_midline_rectangle(t, base),
        bases=(SideId(base),),
        area=h * a / 4,
        params={"h": h, "a": a},
    )


def max_rectangles(t: Triangle) -> List[PolygonSolution]:
    """
    All maximal inscribed rectangles: 3 (acute), 2 (right) or 1 (obtuse)

    In a right triangle the rectangles on the two legs are the same polygon;
    it is reported once, carrying both legs in `bases`.
    """
    cls = classify(t)
    solutions = []
    seen_legs = False
    for side in SideId:
        if not _admissible(t, side):
            continue
        if cls.kind is TriangleKind.RIGHT and cls.vertex in side.endpoints:
            if seen_legs:
                continue
            seen_legs = True
            legs = SideId.adjacent_to(cls.vertex)
            first = max_rectangle_on(t, side)
            solutions.append(PolygonSolution(
                kind=first.kind,
                vertices=first.vertices,
                bases=legs,
                area=first.area,
                params=first.params,
            ))
            continue
        solutions.append(max_rectangle_on(t, side))
    return solutions


# === Squares ===

def inscribed_square_side(h: float, a: float) -> float:
    """
    Side of the inscribed square on a base a with height h: s = h*a/(h + a)

    Raises:
        NonPositiveInput: if h or a is not positive
    """
    if not (h > 0 and a > 0):
        raise NonPositiveInput(f"Height and base must be positive, got h={h}, a={a}")
    return h * a / (h + a)


@dataclass(frozen=True)
class PolyaConstruction:
    """
    Polya's construction on one side

    A small seed square is erected on the base next to the dilation centre,
    the ray from the centre through the seed's free corner meets the far
    side at `ray_end`, and dilating the seed by `ratio` gives the square.
    """
    base: SideId
    centre: Point
    seed: Tuple[Point, Point, Point, Point]
    ray_end: Point
    ratio: float
    square: PolygonSolution


def polya_construction(t: Triangle, base: SideId) -> PolyaConstruction:
    """
    Run Polya's construction on `base`

    Raises:
        ObtuseBaseAngle: if a base angle is obtuse
    """
    base = SideId(base)
    _require_admissible(t, base)
    p, q, r = _base_frame(t, base)
    d = p.lerp(r, POLYA_SEED_FRACTION)
    e = _foot(d, p, q)
    s0 = d.distance(e)
    f = e + (q - p).unit() * s0
    g = f + (d - e)
    hit = line_intersection(p, g - p, q, r - q)
    ratio = hit.distance(p) / g.distance(p)
    logger.debug("Polya on side %s: seed side %.6g, dilation ratio %.6g", base.value, s0, ratio)

    def dilate(x):
        return p + (x - p) * ratio

    vertices = (dilate(e), dilate(f), hit, dilate(d))
    side = s0 * ratio
    h, a = height(t, base), t.side_length(base)
    square = PolygonSolution(
        kind=PolygonKind.SQUARE,
        vertices=vertices,
        bases=(base,),
        area=side * side,
        params={"s": side, "h": h, "a": a},
    )
    return PolyaConstruction(base, p, (e, f, g, d), hit, ratio, square)


def construct_inscribed_square(t: Triangle, base: SideId) -> PolygonSolution:
    """The inscribed square on `base`, built by Polya's dilation"""
    return polya_construction(t, base).square


def inscribed_squares(t: Triangle) -> List[PolygonSolution]:
    """
    Every inscribed square: 3 (acute), 2 (right) or 1 (obtuse)

    A right triangle's two leg squares share the right-angle corner and are
    the same square; it is reported once with both legs.
    """
    cls = classify(t)
    solutions = []
    seen_legs = False
    for side in SideId:
        if not _admissible(t, side):
            continue
        square = construct_inscribed_square(t, side)
        if cls.kind is TriangleKind.RIGHT and cls.vertex in side.endpoints:
            if seen_legs:
                continue
            seen_legs = True
            square = PolygonSolution(
                kind=square.kind,
                vertices=square.vertices,
                bases=SideId.adjacent_to(cls.vertex),
                area=square.area,
                params=square.params,
            )
        solutions.append(square)
    return solutions


def square_vs_rectangle_gap(h: float, a: float) -> float:
    """
    h*a/4 - (h*a/(h + a))**2, the max rectangle's excess over the square

    Never negative; zero exactly when h == a.
    """
    s = inscribed_square_side(h, a)
    return h * a / 4 - s * s


def square_vs_rectangle_gap_factored(h: float, a: float) -> float:
    """The same gap written as h*a*(h - a)**2 / (4*(h + a)**2)"""
    if not (h > 0 and a > 0):
        raise NonPositiveInput(f"Height and base must be positive, got h={h}, a={a}")
    return h * a * (h - a) ** 2 / (4 * (h + a) ** 2)


def inscribed_square_triple(t: Triangle) -> SquareTriple:
    """
    Inscribed square sides (s_a, s_b, s_c) of an acute triangle

    Raises:
        NotAcute: for right or obtuse triangles (see wedged.enclosed_square_triple)
    """
    cls = classify(t)
    if cls.kind is not TriangleKind.ACUTE:
        raise NotAcute(f"Triangle is {cls}; use the enclosed-square dispatcher instead")
    values = [inscribed_square_side(height(t, s), t.side_length(s)) for s in SideId]
    return SquareTriple(*values)


def admissible_sides(t: Triangle) -> List[SideId]:
    """Sides whose two base angles are both non-obtuse"""
    return [s for s in SideId if _admissible(t, s)]


__all__ = [
    "PolyaConstruction",
    "admissible_sides",
    "competitor_parallelogram",
    "construct_inscribed_square",
    "inscribed_square_side",
    "inscribed_square_triple",
    "inscribed_squares",
    "max_parallelograms",
    "max_rectangle_on",
    "max_rectangles",
    "parallelogram_identity_residual",
    "polya_construction",
    "square_vs_rectangle_gap",
    "square_vs_rectangle_gap_factored",
]
