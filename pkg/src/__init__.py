"""
TriEnclose - maximal polygons enclosed in a triangle

This package provides tools for:
- Solving the largest inscribed parallelograms, rectangles and squares
- Wedging squares and rectangles into an obtuse corner
- Solving Calabi's equal-squares triangle and mapping which square wins
- Checking every closed form against an independent brute-force oracle

Command line usage: python -m src.enclose --help
"""

# Package metadata
__version__ = '0.1.0'

# Import core components for easy access
from .geometry import SideId, Triangle, Vertex, classify, make_triangle, triangle_from_angles
from .geometry.errors import GeometryError, InvalidInput, NotApplicable
from .solvers import enclosed_square_triple, solve_calabi


def square_sides(A, B, C):
    """
    Enclosed square sides (s_a, s_b, s_c) of the triangle ABC

    This is a convenience function that builds and validates the triangle
    and picks inscribed or wedged squares per side in a single call.

    Args:
        A, B, C: vertices as Points or (x, y) pairs

    Returns:
        tuple: (s_a, s_b, s_c)

    Raises:
        InvalidInput: If the points do not form a triangle
    """
    return enclosed_square_triple(make_triangle(A, B, C)).as_tuple()


def calabi_ratio():
    """Longest over shortest side of Calabi's triangle, 1.5513875..."""
    return solve_calabi().ratio
