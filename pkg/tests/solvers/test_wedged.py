"""
Test wedged squares and rectangles and the enclosed-square dispatcher
"""

import math
import os
import sys
import unittest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

import numpy as np

from src.geometry.core import SideId, Vertex, angle_at, height, make_triangle, triangle_from_angles
from src.geometry.errors import (
    BaseNotAdjacent,
    NotObtuse,
    NotObtuseAtVertex,
    NotObtuseOnBase,
    OutOfRange,
    SidesNotSorted,
)
from src.geometry.shapes import SquareKind, contains, distance_to_boundary, is_rectangle, is_square
from src.solvers.inscribed import inscribed_square_side, inscribed_square_triple
from src.solvers.wedged import (
    WedgeParams,
    construct_wedged_square,
    enclosed_square,
    enclosed_square_polygon,
    enclosed_square_triple,
    max_wedged_rectangle,
    wedged_ordering_check,
    wedged_rect_vs_square_gap,
    wedged_rectangle,
    wedged_rectangle_area,
    wedged_square_side,
)
from tests.fixtures import obtuse_sorted_triangle, sample

OBTUSE = triangle_from_angles(120, 35, 2.0)   # obtuse at A, theta on c is 35 degrees
RIGHT = make_triangle((0, 0), (3, 0), (0, 4))


class TestWedgedSquare(unittest.TestCase):
    """Test the wedged square side and construction"""

    def test_side_formula(self):
        """s = b sin(theta)/(sin(theta) + cos(theta)), so s/(b - s) = tan(theta)"""
        for theta in np.linspace(0.05, math.pi / 2 - 0.05, 25):
            s = wedged_square_side(2.0, theta)
            self.assertAlmostEqual(s / (2.0 - s), math.tan(theta), delta=1e-12 * math.tan(theta))
        self.assertAlmostEqual(wedged_square_side(3.0, math.pi / 4), 1.5, places=15)

    def test_side_range(self):
        """b > 0 and 0 < theta < pi/2"""
        for b, theta in ((0.0, 0.5), (-1.0, 0.5), (1.0, 0.0), (1.0, math.pi / 2), (1.0, 2.0)):
            with self.assertRaises(OutOfRange):
                wedged_square_side(b, theta)

    def test_construction(self):
        """Square in the obtuse corner with its far corner on the far side"""
        tol = 1e-9 * OBTUSE.longest_side_length()
        for side, far in ((SideId.c, Vertex.B), (SideId.b, Vertex.C)):
            square = construct_wedged_square(OBTUSE, Vertex.A, side)
            expected = wedged_square_side(OBTUSE.side_length(side), angle_at(OBTUSE, far))
            self.assertAlmostEqual(square.params["s"], expected, delta=1e-12)
            self.assertEqual(square.vertices[0], OBTUSE.A)
            self.assertEqual(square.anchor, Vertex.A)
            self.assertTrue(is_square(square.vertices, tol))
            self.assertTrue(all(contains(OBTUSE, p, tol) for p in square.vertices))
            self.assertLess(distance_to_boundary(OBTUSE, square.vertices[2]), tol)

    def test_right_corner_matches_inscribed(self):
        """At a right angle the wedged square is the inscribed one"""
        square = construct_wedged_square(RIGHT, Vertex.A, SideId.c)
        self.assertAlmostEqual(square.params["s"], 12 / 7, places=12)

    def test_preconditions(self):
        """Acute corners and sides away from the corner are rejected"""
        with self.assertRaises(NotObtuseAtVertex):
            construct_wedged_square(OBTUSE, Vertex.B, SideId.c)
        with self.assertRaises(BaseNotAdjacent):
            construct_wedged_square(OBTUSE, Vertex.A, SideId.a)


class TestWedgedRectangle(unittest.TestCase):
    """Test the wedged rectangle family and its maximum"""

    def test_area_peaks_at_midpoint(self):
        """(b/2 + e)(b/2 - e) tan(theta) is largest at e = 0"""
        b, theta = 2.0, math.radians(35)
        best = wedged_rectangle_area(b, theta, 0.0)
        self.assertAlmostEqual(best, b * b / 4 * math.tan(theta), places=14)
        for e in np.linspace(-1.0, 1.0, 41):
            if abs(e) > 1e-12:
                self.assertLess(wedged_rectangle_area(b, theta, e), best)
        with self.assertRaises(OutOfRange):
            wedged_rectangle_area(b, theta, 1.01)

    def test_params(self):
        """Length along the base and height of the family member"""
        w = WedgeParams(2.0, math.pi / 4, 0.5)
        self.assertEqual(w.length, 1.5)
        self.assertAlmostEqual(w.w, 0.5, places=14)
        self.assertAlmostEqual(w.area, 0.75, places=14)

    def test_rectangle_geometry(self):
        """The polygon is a rectangle of the formula's area inside the triangle"""
        tol = 1e-9 * OBTUSE.longest_side_length()
        for side in (SideId.b, SideId.c):
            for e in (-0.4, 0.0, 0.3):
                rect = wedged_rectangle(OBTUSE, side, e)
                self.assertTrue(is_rectangle(rect.vertices, tol))
                self.assertAlmostEqual(rect.shoelace_area(), rect.area, delta=1e-9)
                self.assertTrue(all(contains(OBTUSE, p, tol) for p in rect.vertices))
                self.assertLess(distance_to_boundary(OBTUSE, rect.vertices[2]), tol)
            best = max_wedged_rectangle(OBTUSE, side)
            self.assertEqual(best.params["e"], 0.0)
            self.assertGreaterEqual(best.area, wedged_rectangle(OBTUSE, side, 0.2).area)

    def test_needs_obtuse_base(self):
        """The side opposite the obtuse angle has no wedged rectangle"""
        with self.assertRaises(NotObtuseOnBase):
            max_wedged_rectangle(OBTUSE, SideId.a)

    def test_rectangle_beats_square(self):
        """(b^2/4) tan(theta) >= s^2, with equality only at 45 degrees"""
        for theta in np.linspace(0.01, math.pi / 2 - 0.01, 300):
            gap = wedged_rect_vs_square_gap(1.7, theta)
            if abs(theta - math.pi / 4) > 1e-3:
                self.assertGreater(gap, 0.0)
            else:
                self.assertGreaterEqual(gap, -1e-15)
        self.assertAlmostEqual(wedged_rect_vs_square_gap(1.7, math.pi / 4), 0.0, places=14)


class TestOrdering(unittest.TestCase):
    """Test the rectangle area chain for obtuse triangles"""

    def test_chain_non_increasing(self):
        """Areas on a, b, c never increase when a > b > c, obtuse at A"""
        for t in sample(obtuse_sorted_triangle, 500, 7):
            result = wedged_ordering_check(t)
            self.assertTrue(result.non_increasing, result.areas)
            self.assertEqual([s.base for s in result.solutions], [SideId.a, SideId.b, SideId.c])

    def test_isosceles_allowed(self):
        """b = c is accepted and the two wedged rectangles are equal"""
        t = make_triangle((0, 0.3), (-1, 0), (1, 0))
        result = wedged_ordering_check(t)
        self.assertTrue(result.non_increasing)
        self.assertAlmostEqual(result.areas[1], result.areas[2], delta=1e-12)
        self.assertGreater(result.areas[0], result.areas[1])

    def test_preconditions(self):
        """Needs an obtuse angle at A and b >= c"""
        with self.assertRaises(NotObtuse):
            wedged_ordering_check(triangle_from_angles(60, 60, 1.0))
        with self.assertRaises(SidesNotSorted):
            wedged_ordering_check(triangle_from_angles(30, 120, 1.0))
        with self.assertRaises(SidesNotSorted):
            wedged_ordering_check(triangle_from_angles(120, 20, 1.0))


class TestEnclosedSquares(unittest.TestCase):
    """Test the inscribed-or-wedged dispatcher"""

    def test_acute_matches_inscribed(self):
        """Acute triangles only have inscribed squares"""
        t = triangle_from_angles(75, 60, 2.0)
        triple = enclosed_square_triple(t)
        self.assertEqual(triple.as_tuple(), inscribed_square_triple(t).as_tuple())
        self.assertEqual({triple.kind(s) for s in SideId}, {SquareKind.INSCRIBED})

    def test_obtuse_kinds(self):
        """The two sides at the obtuse angle get wedged squares"""
        triple = enclosed_square_triple(OBTUSE)
        self.assertIs(triple.kind_a, SquareKind.INSCRIBED)
        self.assertIs(triple.kind_b, SquareKind.WEDGED)
        self.assertIs(triple.kind_c, SquareKind.WEDGED)
        value, kind = enclosed_square(OBTUSE, SideId.c)
        self.assertAlmostEqual(value, wedged_square_side(2.0, math.radians(35)), places=12)
        self.assertIs(kind, SquareKind.WEDGED)

    def test_right_triangle_all_inscribed(self):
        """A right angle is not obtuse, so every square is inscribed"""
        triple = enclosed_square_triple(RIGHT)
        self.assertEqual({triple.kind(s) for s in SideId}, {SquareKind.INSCRIBED})
        self.assertAlmostEqual(triple.s_b, 12 / 7, places=12)
        self.assertAlmostEqual(triple.s_c, 12 / 7, places=12)

    def test_polygon_matches_value(self):
        """The polygon's side equals the dispatcher's value"""
        for side in SideId:
            value, _ = enclosed_square(OBTUSE, side)
            polygon = enclosed_square_polygon(OBTUSE, side)
            self.assertAlmostEqual(polygon.params["s"], value, places=12)

    def test_isosceles_legs_equal(self):
        """Apex 95 degrees, legs 2: equal wedged squares on the legs, inscribed on the base"""
        t = triangle_from_angles(42.5, 42.5, 2 * 2.0 * math.sin(math.radians(47.5)), SideId.a)
        self.assertAlmostEqual(t.b, 2.0, places=12)
        triple = enclosed_square_triple(t)
        self.assertAlmostEqual(triple.s_b, triple.s_c, delta=1e-12)
        self.assertEqual((triple.kind_a, triple.kind_b, triple.kind_c),
                         (SquareKind.INSCRIBED, SquareKind.WEDGED, SquareKind.WEDGED))

    def test_continuous_across_right_angle(self):
        """As the angle at A closes on 90 degrees the wedged and inscribed sides meet"""
        gaps = []
        for delta in (1.0, 0.1, 0.01, 1e-3, 1e-4):
            obtuse = triangle_from_angles(90 + delta, 30, 2.0)
            wedged_side, kind = enclosed_square(obtuse, SideId.c)
            self.assertIs(kind, SquareKind.WEDGED)
            inscribed_side = inscribed_square_side(height(obtuse, SideId.c), obtuse.c)
            gaps.append(abs(wedged_side - inscribed_side))

            acute_side, kind = enclosed_square(triangle_from_angles(90 - delta, 30, 2.0), SideId.c)
            self.assertIs(kind, SquareKind.INSCRIBED)
            self.assertLess(abs(wedged_side - acute_side), 0.05 * delta)
        self.assertEqual(gaps, sorted(gaps, reverse=True))
        self.assertLess(gaps[-1], 1e-6)


if __name__ == '__main__':
    unittest.main()
