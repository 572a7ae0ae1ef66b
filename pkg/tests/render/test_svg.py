"""
Test the SVG figures and the atlas drawing
"""

import os
import sys
import unittest
import xml.etree.ElementTree as ET

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from src.atlas import AtlasRow, build_atlas
from src.geometry.core import SideId, triangle_from_angles
from src.geometry.errors import NotObtuse
from src.render import FIGURES, atlas_svg, figure_svg
from src.solvers.inscribed import max_parallelograms, polya_construction

NS = {"svg": "http://www.w3.org/2000/svg"}
EXAMPLE = triangle_from_angles(75, 60, 2.0)
OBTUSE = triangle_from_angles(120, 35, 2.0)


def _parse(svg):
    return ET.fromstring(svg.encode())


def _points(polygon):
    return [tuple(float(v) for v in pair.split(",")) for pair in polygon.get("points").split()]


class TestFigures(unittest.TestCase):
    """Test the construction diagrams"""

    def test_every_figure_renders(self):
        """Each figure is a well-formed SVG document"""
        for which in FIGURES:
            t = OBTUSE if which.startswith("wedged") else EXAMPLE
            root = _parse(figure_svg(t, which))
            self.assertTrue(root.tag.endswith("svg"))
            self.assertTrue(root.findall(".//svg:polygon", NS))

    def test_exact_coordinates(self):
        """Polygon coordinates in the file are the computed ones"""
        root = _parse(figure_svg(EXAMPLE, "parallelogram"))
        polygons = root.findall(".//svg:g/svg:polygon", NS)
        self.assertEqual(len(polygons), 4)
        self.assertEqual(_points(polygons[0]), [p.as_tuple() for p in EXAMPLE.vertices()])
        for polygon, solution in zip(polygons[1:], max_parallelograms(EXAMPLE)):
            self.assertEqual(_points(polygon), [p.as_tuple() for p in solution.vertices])

    def test_polya_shows_seed(self):
        """The seed square and the dilation ray are drawn"""
        root = _parse(figure_svg(EXAMPLE, "polya", SideId.b))
        polygons = root.findall(".//svg:g/svg:polygon", NS)
        polya = polya_construction(EXAMPLE, SideId.b)
        self.assertEqual(_points(polygons[1]), [p.as_tuple() for p in polya.seed])
        self.assertEqual(_points(polygons[-1]), [p.as_tuple() for p in polya.square.vertices])
        self.assertEqual(len(root.findall(".//svg:g/svg:line", NS)), 1)

    def test_wedged_needs_obtuse(self):
        """Wedged figures on an acute triangle are refused"""
        for which in ("wedged-square", "wedged-rect"):
            with self.assertRaises(NotObtuse):
                figure_svg(EXAMPLE, which)

    def test_unknown_figure(self):
        """Only the listed figures exist"""
        with self.assertRaises(ValueError):
            figure_svg(EXAMPLE, "hexagon")

    def test_deterministic(self):
        """Same input, same bytes"""
        self.assertEqual(figure_svg(OBTUSE, "wedged-square"), figure_svg(OBTUSE, "wedged-square"))


class TestAtlasSvg(unittest.TestCase):
    """Test the apex atlas drawing"""

    def test_atlas(self):
        """Sample dots, labels and a legend entry per pattern"""
        rows = build_atlas(8, 8)
        root = _parse(atlas_svg(rows, contour_resolution=40))
        labels = [t.text for t in root.findall("svg:text", NS)]
        for name in ("B", "C", "D", "E"):
            self.assertIn(name, labels)
        patterns = {r.pattern for r in rows if r.pattern}
        self.assertTrue(patterns.issubset(set(labels)))
        self.assertTrue(root.findall(".//svg:g/svg:path", NS))

    def test_outside_rows_skipped(self):
        """Rows without a pattern draw no dot"""
        plain = _parse(atlas_svg([], contour_resolution=20))
        extra = _parse(atlas_svg([AtlasRow(-0.9, 0.01, "outside", "")], contour_resolution=20))
        self.assertEqual(len(plain.findall(".//svg:circle", NS)), len(extra.findall(".//svg:circle", NS)))


if __name__ == '__main__':
    unittest.main()
