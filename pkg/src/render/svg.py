"""
SVG diagrams of the constructions and of the apex atlas

Geometry is written in the mathematical (y-up) frame inside a single group
whose transform flips it onto the SVG canvas, so the coordinates in the
file are exactly the computed ones. Labels live outside that group, in
pixel coordinates, so text is not mirrored.
"""

import io
import math
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import svgwrite

from src.geometry.core import Point, SideId, Triangle, TriangleKind, classify
from src.geometry.errors import NotObtuse
from src.geometry.shapes import PolygonSolution
from src.solvers import inscribed, wedged
from src.solvers.calabi import cubic_ab, cubic_ac, solve_calabi
from .contour import zero_segments

CANVAS_WIDTH = 640
PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf"]
FIGURES = ("parallelogram", "rectangle", "square", "wedged-square", "wedged-rect", "polya")


class DiagramCanvas:
    """A drawing with a y-up world frame mapped onto a fixed-width canvas"""

    def __init__(self, bounds: Tuple[float, float, float, float], width: int = CANVAS_WIDTH, title: str = ""):
        xmin, ymin, xmax, ymax = bounds
        self.bounds = bounds
        self.scale = width / (xmax - xmin)
        height = int(math.ceil(self.scale * (ymax - ymin)))
        self.drawing = svgwrite.Drawing(size=(width, height), profile="full", debug=False)
        self.drawing.add(self.drawing.rect(insert=(0, 0), size=(width, height), fill="white"))
        self.world = self.drawing.g(
            transform=f"matrix({self.scale!r} 0 0 {-self.scale!r} {-self.scale * xmin!r} {self.scale * ymax!r})"
        )
        self.drawing.add(self.world)
        self.stroke = (xmax - xmin) / 300
        if title:
            self.drawing.add(self.drawing.text(title, insert=(8, 18), font_size=14, font_family="sans-serif"))

    def to_canvas(self, p: Point) -> Tuple[float, float]:
        xmin, _, _, ymax = self.bounds
        return (self.scale * (p.x - xmin), self.scale * (ymax - p.y))

    def polygon(self, points: Sequence[Point], stroke="black", fill="none", opacity=1.0, dashed=False, weight=1.0):
        extra = {"stroke_dasharray": f"{self.stroke * 4!r},{self.stroke * 3!r}"} if dashed else {}
        self.world.add(self.drawing.polygon(
            points=[p.as_tuple() for p in points], stroke=stroke, fill=fill, fill_opacity=opacity,
            stroke_width=self.stroke * weight, **extra,
        ))

    def segment(self, p: Point, q: Point, stroke="black", dashed=False, weight=1.0):
        extra = {"stroke_dasharray": f"{self.stroke * 4!r},{self.stroke * 3!r}"} if dashed else {}
        self.world.add(self.drawing.line(start=p.as_tuple(), end=q.as_tuple(), stroke=stroke,
                                         stroke_width=self.stroke * weight, **extra))

    def segments(self, pairs: Iterable, stroke="black", weight=1.0):
        for a, b in pairs:
            self.segment(Point(*a), Point(*b), stroke=stroke, weight=weight)

    def circle(self, centre: Point, r: float, stroke="black", fill="none", dashed=False):
        extra = {"stroke_dasharray": f"{self.stroke * 4!r},{self.stroke * 3!r}"} if dashed else {}
        self.world.add(self.drawing.circle(center=centre.as_tuple(), r=r, stroke=stroke, fill=fill,
                                           stroke_width=self.stroke, **extra))

    def arc(self, start: Point, end: Point, r: float, stroke="black"):
        """Circular arc turning counterclockwise (in the world frame) from start to end"""
        d = f"M {start.x!r},{start.y!r} A {r!r},{r!r} 0 0 1 {end.x!r},{end.y!r}"
        self.world.add(self.drawing.path(d=d, stroke=stroke, fill="none", stroke_width=self.stroke))

    def dot(self, centre: Point, fill="black", r: Optional[float] = None):
        self.world.add(self.drawing.circle(center=centre.as_tuple(), r=r or self.stroke * 1.5, fill=fill))

    def label(self, text: str, at: Point, dx=4.0, dy=-4.0):
        x, y = self.to_canvas(at)
        self.drawing.add(self.drawing.text(text, insert=(x + dx, y + dy), font_size=12, font_family="sans-serif"))

    def tostring(self) -> str:
        out = io.StringIO()
        self.drawing.write(out)
        return out.getvalue()


def _triangle_bounds(t: Triangle, margin: float = 0.08) -> Tuple[float, float, float, float]:
    xs = [p.x for p in t.vertices()]
    ys = [p.y for p in t.vertices()]
    pad = margin * max(max(xs) - min(xs), max(ys) - min(ys))
    return (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)


def _triangle_canvas(t: Triangle, title: str) -> DiagramCanvas:
    canvas = DiagramCanvas(_triangle_bounds(t), title=title)
    canvas.polygon(t.vertices(), weight=1.5)
    for name, p in zip("ABC", t.vertices()):
        canvas.label(name, p)
    return canvas


def _draw_solutions(canvas: DiagramCanvas, solutions: List[PolygonSolution]):
    for i, solution in enumerate(solutions):
        colour = PALETTE[i % len(PALETTE)]
        canvas.polygon(solution.vertices, stroke=colour, fill=colour, opacity=0.25)


def _obtuse_vertex(t: Triangle):
    cls = classify(t)
    if cls.kind is not TriangleKind.OBTUSE:
        raise NotObtuse(f"Triangle is {cls}; wedged figures need an obtuse triangle")
    return cls.vertex


def figure_svg(t: Triangle, which: str, base: Optional[SideId] = None) -> str:
    """
    Draw one construction on the triangle

    Args:
        t (Triangle): the triangle
        which (str): one of FIGURES
        base (SideId, optional): restrict to one side where that makes sense

    Returns:
        str: the SVG document

    Raises:
        NotApplicable: if the construction does not exist for this triangle
    """
    if which not in FIGURES:
        raise ValueError(f"Unknown figure {which!r}; expected one of {', '.join(FIGURES)}")
    canvas = _triangle_canvas(t, which)

    if which == "parallelogram":
        _draw_solutions(canvas, inscribed.max_parallelograms(t))

    elif which == "rectangle":
        solutions = [inscribed.max_rectangle_on(t, base)] if base else inscribed.max_rectangles(t)
        _draw_solutions(canvas, solutions)

    elif which == "square":
        solutions = [inscribed.construct_inscribed_square(t, base)] if base else inscribed.inscribed_squares(t)
        _draw_solutions(canvas, solutions)

    elif which == "polya":
        side = base or max(SideId, key=t.side_length)
        polya = inscribed.polya_construction(t, side)
        canvas.polygon(polya.seed, stroke="gray", dashed=True)
        canvas.segment(polya.centre, polya.ray_end, stroke="gray", dashed=True)
        canvas.dot(polya.ray_end)
        _draw_solutions(canvas, [polya.square])

    elif which == "wedged-square":
        corner = _obtuse_vertex(t)
        sides = [base] if base else list(SideId.adjacent_to(corner))
        squares = [wedged.construct_wedged_square(t, corner, side) for side in sides]
        for square in squares:
            canvas.segment(square.vertices[0], square.vertices[2], stroke="gray", dashed=True)
        _draw_solutions(canvas, squares)

    elif which == "wedged-rect":
        corner = _obtuse_vertex(t)
        sides = [base] if base else list(SideId.adjacent_to(corner))
        _draw_solutions(canvas, [wedged.max_wedged_rectangle(t, side) for side in sides])

    return canvas.tostring()


# === Atlas ===

ATLAS_BOUNDS = (-1.05, -0.05, 0.05, 1.05)
CONTOUR_RESOLUTION = 240


def pattern_colours(patterns: Iterable[str]) -> Dict[str, str]:
    return {p: PALETTE[i % len(PALETTE)] for i, p in enumerate(sorted(set(patterns)))}


def atlas_svg(rows: Sequence, contour_resolution: int = CONTOUR_RESOLUTION) -> str:
    """
    The apex frame with both equality cubics, the sampled patterns and E

    Args:
        rows: atlas rows with x, y and pattern attributes

    Returns:
        str: the SVG document
    """
    canvas = DiagramCanvas(ATLAS_BOUNDS, title="apex atlas")
    c, b, d = Point(0.0, 0.0), Point(-1.0, 0.0), Point(-0.5, 0.0)
    canvas.segment(b, c, weight=1.5)
    canvas.circle(c, 1.0, stroke="gray")
    canvas.arc(c, b, 0.5, stroke="gray")
    canvas.segment(d, Point(-0.5, 1.0), stroke="gray", dashed=True)

    rows = [r for r in rows if r.pattern]
    colours = pattern_colours(r.pattern for r in rows)
    for row in rows:
        canvas.dot(Point(row.x, row.y), fill=colours[row.pattern], r=canvas.stroke * 1.2)

    x_range = (ATLAS_BOUNDS[0], ATLAS_BOUNDS[2])
    y_range = (0.0, ATLAS_BOUNDS[3])
    canvas.segments(zero_segments(cubic_ab, x_range, y_range, contour_resolution, contour_resolution),
                    stroke="#444444", weight=1.5)
    canvas.segments(zero_segments(cubic_ac, x_range, y_range, contour_resolution, contour_resolution),
                    stroke="#888888", weight=1.5)

    e = solve_calabi().apex_point().point()
    canvas.dot(e, fill="black", r=canvas.stroke * 3)
    for name, p in (("B", b), ("C", c), ("D", d), ("E", e)):
        canvas.label(name, p)
    y_key = 36
    for pattern, colour in colours.items():
        canvas.drawing.add(canvas.drawing.rect(insert=(8, y_key - 9), size=(10, 10), fill=colour))
        canvas.drawing.add(canvas.drawing.text(pattern, insert=(22, y_key), font_size=12, font_family="monospace"))
        y_key += 16
    return canvas.tostring()
