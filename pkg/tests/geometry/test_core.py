"""
Test triangle construction, measurement and classification
"""

import math
import os
import sys
import unittest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from hypothesis import given, settings, strategies as st

from src.geometry.core import (
    Point,
    SideId,
    TriangleKind,
    Vertex,
    angle_at,
    angles,
    classify,
    height,
    height_sum,
    make_triangle,
    sorted_sides,
    triangle_from_angles,
)
from src.geometry.errors import (
    DegenerateTriangle,
    GeometryError,
    InvalidAngles,
    InvalidInput,
    NonFiniteCoordinate,
    NonPositiveInput,
)
from tests.fixtures import acute_triangle, obtuse_sorted_triangle, obtuse_triangle, sample


class TestPoint(unittest.TestCase):
    """Test the Point helpers"""

    def test_rejects_non_finite(self):
        """NaN and infinite coordinates are refused"""
        with self.assertRaises(NonFiniteCoordinate):
            Point(float('nan'), 0.0)
        with self.assertRaises(NonFiniteCoordinate):
            Point(0.0, float('inf'))

    def test_vector_arithmetic(self):
        """Addition, scaling, dot and cross products"""
        p, q = Point(1.0, 2.0), Point(3.0, -1.0)
        self.assertEqual(p + q, Point(4.0, 1.0))
        self.assertEqual(q - p, Point(2.0, -3.0))
        self.assertEqual(2 * p, Point(2.0, 4.0))
        self.assertEqual(p.dot(q), 1.0)
        self.assertEqual(p.cross(q), -7.0)
        self.assertEqual(Point(1.0, 0.0).perp(), Point(-0.0, 1.0))
        self.assertEqual(p.midpoint(q), Point(2.0, 0.5))
        self.assertAlmostEqual(Point(3.0, 4.0).norm(), 5.0)


class TestMakeTriangle(unittest.TestCase):
    """Test triangle validation"""

    def test_side_labels(self):
        """a = BC, b = CA, c = AB"""
        t = make_triangle(Point(0, 0), Point(3, 0), Point(0, 4))
        self.assertAlmostEqual(t.a, 5.0)
        self.assertAlmostEqual(t.b, 4.0)
        self.assertAlmostEqual(t.c, 3.0)
        self.assertAlmostEqual(t.side_length(SideId.a), 5.0)
        self.assertAlmostEqual(t.area, 6.0)

    def test_accepts_tuples(self):
        """Plain (x, y) pairs are converted to points"""
        t = make_triangle((0, 0), (1, 0), (0, 1))
        self.assertIsInstance(t.A, Point)

    def test_collinear_is_degenerate(self):
        """Collinear points are rejected"""
        with self.assertRaises(DegenerateTriangle):
            make_triangle(Point(0, 0), Point(1, 0), Point(2, 0))

    def test_coincident_is_degenerate(self):
        """Repeated points are rejected"""
        with self.assertRaises(DegenerateTriangle):
            make_triangle(Point(1, 1), Point(1, 1), Point(2, 3))

    def test_nearly_collinear_is_degenerate_at_any_scale(self):
        """The area tolerance scales with the triangle"""
        for k in (1e-6, 1.0, 1e6):
            with self.assertRaises(DegenerateTriangle):
                make_triangle(Point(0, 0), Point(k, 0), Point(2 * k, 1e-14 * k))

    def test_orientation_recorded(self):
        """Clockwise input keeps its labels and is flagged -1"""
        ccw = make_triangle(Point(0, 0), Point(1, 0), Point(0, 1))
        cw = make_triangle(Point(0, 0), Point(0, 1), Point(1, 0))
        self.assertEqual(ccw.orientation, 1)
        self.assertEqual(cw.orientation, -1)
        self.assertEqual(cw.B, Point(0, 1))

    def test_error_families(self):
        """Input errors are ValueErrors and GeometryErrors"""
        self.assertTrue(issubclass(DegenerateTriangle, InvalidInput))
        self.assertTrue(issubclass(InvalidInput, ValueError))
        self.assertTrue(issubclass(InvalidInput, GeometryError))

    def test_inward_normal_points_inside(self):
        """Each inward normal points toward the opposite vertex, for both windings"""
        for t in (make_triangle((0, 0), (2, 0), (1, 1)), make_triangle((0, 0), (1, 1), (2, 0))):
            for side in SideId:
                p, _ = t.side_points(side)
                apex = t.vertex(side.opposite)
                self.assertGreater((apex - p).dot(t.inward_normal(side)), 0)


class TestTriangleFromAngles(unittest.TestCase):
    """Test building triangles from two angles and a side"""

    def test_equilateral(self):
        """60/60 on a unit side gives the unit equilateral triangle"""
        t = triangle_from_angles(60, 60, 1.0)
        for length in t.sides():
            self.assertAlmostEqual(length, 1.0, places=12)

    def test_example_sides(self):
        """75 and 60 degrees on c = 2"""
        t = triangle_from_angles(75, 60, 2.0)
        self.assertAlmostEqual(t.a, 1 + math.sqrt(3), places=12)
        self.assertAlmostEqual(t.b, math.sqrt(6), places=12)
        self.assertAlmostEqual(height(t, SideId.a), math.sqrt(3), places=12)
        self.assertAlmostEqual(math.degrees(angle_at(t, Vertex.C)), 45.0, places=9)

    def test_other_sides(self):
        """The angles sit at the endpoints of the chosen side"""
        t = triangle_from_angles(50, 70, 3.0, side=SideId.a)
        self.assertAlmostEqual(t.a, 3.0, places=12)
        self.assertAlmostEqual(math.degrees(angle_at(t, Vertex.B)), 50.0, places=9)
        self.assertAlmostEqual(math.degrees(angle_at(t, Vertex.C)), 70.0, places=9)
        t = triangle_from_angles(50, 70, 3.0, side=SideId.b)
        self.assertAlmostEqual(t.b, 3.0, places=12)
        self.assertAlmostEqual(math.degrees(angle_at(t, Vertex.C)), 50.0, places=9)

    def test_invalid_angles(self):
        """Angles must be positive and sum below 180"""
        for alpha, beta in ((100, 80), (0, 60), (-5, 60), (120, 70)):
            with self.assertRaises(InvalidAngles):
                triangle_from_angles(alpha, beta, 1.0)

    def test_non_positive_side(self):
        """The side length must be positive"""
        with self.assertRaises(NonPositiveInput):
            triangle_from_angles(60, 60, 0.0)

    @settings(derandomize=True, deadline=None, max_examples=200)
    @given(st.floats(1, 170), st.floats(1, 170))
    def test_angle_sum(self, alpha, beta):
        """Interior angles always add up to pi"""
        if alpha + beta >= 178:
            return
        t = triangle_from_angles(alpha, beta, 1.0)
        self.assertAlmostEqual(sum(angles(t)), math.pi, places=12)

    @settings(derandomize=True, deadline=None, max_examples=200)
    @given(st.floats(1, 170), st.floats(1, 170), st.sampled_from(list(SideId)))
    def test_angles_round_trip(self, first, second, side):
        """The angles read back from the built triangle are the ones asked for"""
        if first + second >= 178:
            return
        t = triangle_from_angles(first, second, 1.5, side)
        p, q = side.endpoints
        self.assertLess(abs(angle_at(t, p) - math.radians(first)), 1e-9)
        self.assertLess(abs(angle_at(t, q) - math.radians(second)), 1e-9)


def _moved(p, phi, k, dx, dy, flip):
    """p rotated by phi, optionally mirrored, scaled by k and shifted by k*(dx, dy)"""
    y = -p.y if flip else p.y
    c, s = math.cos(phi), math.sin(phi)
    return Point(k * (c * p.x - s * y + dx), k * (s * p.x + c * y + dy))


class TestClassify(unittest.TestCase):
    """Test acute / right / obtuse classification"""

    def test_acute(self):
        """Equilateral is acute with no vertex"""
        cls = classify(triangle_from_angles(60, 60, 1.0))
        self.assertIs(cls.kind, TriangleKind.ACUTE)
        self.assertIsNone(cls.vertex)
        self.assertEqual(str(cls), "acute")

    def test_right(self):
        """3-4-5 triangle is right at A"""
        cls = classify(make_triangle((0, 0), (3, 0), (0, 4)))
        self.assertIs(cls.kind, TriangleKind.RIGHT)
        self.assertIs(cls.vertex, Vertex.A)
        self.assertEqual(str(cls), "right@A")

    def test_right_within_tolerance(self):
        """An angle a hair off 90 degrees still counts as right"""
        t = triangle_from_angles(90 + 1e-9, 30, 1.0)
        self.assertIs(classify(t).kind, TriangleKind.RIGHT)

    def test_obtuse_vertex(self):
        """The obtuse vertex is reported"""
        t = make_triangle((-1, 0), (0, 0.2), (1, 0))
        cls = classify(t)
        self.assertIs(cls.kind, TriangleKind.OBTUSE)
        self.assertIs(cls.vertex, Vertex.B)

    @settings(derandomize=True, deadline=None, max_examples=200)
    @given(st.floats(5, 150), st.floats(5, 150), st.floats(0, 2 * math.pi), st.floats(-6, 6),
           st.floats(-50, 50), st.floats(-50, 50), st.booleans())
    def test_invariant_under_motion_and_scale(self, alpha, beta, phi, log_k, dx, dy, flip):
        """Rotating, reflecting, scaling and shifting keeps the class"""
        gamma = 180 - alpha - beta
        if gamma < 5 or min(abs(alpha - 90), abs(beta - 90), abs(gamma - 90)) < 1e-3:
            return
        t = triangle_from_angles(alpha, beta, 1.0)
        moved = make_triangle(*(_moved(v, phi, 10 ** log_k, dx, dy, flip) for v in (t.A, t.B, t.C)))
        self.assertEqual(classify(moved), classify(t))

    def test_right_survives_extreme_scales(self):
        """A rotated 3-4-5 triangle stays right at A from 1e-6 to 1e6"""
        base = make_triangle((0, 0), (3, 0), (0, 4))
        for k in (1e-6, 1e-3, 1.0, 1e3, 1e6):
            moved = make_triangle(*(_moved(v, 0.7, k, 2.0, -3.0, True) for v in (base.A, base.B, base.C)))
            self.assertEqual(str(classify(moved)), "right@A")


class TestMeasures(unittest.TestCase):
    """Test heights and side orderings"""

    def test_height_times_side_is_twice_area(self):
        """h * len is the same for every side"""
        t = triangle_from_angles(40, 75, 2.5)
        for side in SideId:
            self.assertAlmostEqual(height(t, side) * t.side_length(side), 2 * t.area, places=12)

    def test_sorted_sides(self):
        """Longest side first"""
        t = make_triangle((0, 0), (3, 0), (0, 4))
        self.assertEqual([s for s, _ in sorted_sides(t)], [SideId.a, SideId.b, SideId.c])

    def test_height_sum_orders_sides(self):
        """len + h grows with the side length when a > b > c"""
        t = triangle_from_angles(75, 60, 2.0)
        self.assertGreater(height_sum(t, SideId.a), height_sum(t, SideId.b))
        self.assertGreater(height_sum(t, SideId.b), height_sum(t, SideId.c))


class TestSamplers(unittest.TestCase):
    """Test the seeded triangle samplers the other suites draw from"""

    def test_acute_sampler(self):
        """Thousands of draws across seeds are all valid acute triangles"""
        for offset in range(10):
            for t in sample(acute_triangle, 500, offset):
                self.assertIs(classify(t).kind, TriangleKind.ACUTE)
                self.assertTrue(all(math.radians(10) - 1e-9 < v < math.radians(85) + 1e-9 for v in angles(t)))

    def test_obtuse_samplers(self):
        """Obtuse draws are obtuse, and the sorted ones obtuse at A with a > b > c"""
        for t in sample(obtuse_triangle, 500, 1):
            self.assertIs(classify(t).kind, TriangleKind.OBTUSE)
        for t in sample(obtuse_sorted_triangle, 500, 2):
            self.assertEqual(str(classify(t)), "obtuse@A")
            self.assertGreater(t.a, t.b)
            self.assertGreater(t.b, t.c)


if __name__ == '__main__':
    unittest.main()
