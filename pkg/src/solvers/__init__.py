"""
Closed-form solvers for polygons enclosed in a triangle

- inscribed: maximal parallelograms, rectangles and inscribed squares
- wedged: wedged squares and rectangles at an obtuse vertex, and the
  enclosed-square dispatcher that picks inscribed or wedged per side
- calabi: Calabi's equal-squares triangle and the apex-frame curves
"""

from .inscribed import (
    construct_inscribed_square,
    inscribed_square_side,
    inscribed_square_triple,
    inscribed_squares,
    max_parallelograms,
    max_rectangles,
    parallelogram_identity_residual,
    polya_construction,
    square_vs_rectangle_gap,
)
from .wedged import (
    construct_wedged_square,
    enclosed_square_triple,
    max_wedged_rectangle,
    wedged_ordering_check,
    wedged_rect_vs_square_gap,
    wedged_rectangle_area,
    wedged_square_side,
)
from .calabi import (
    ApexPoint,
    CalabiSolution,
    RegionLabel,
    calabi_cubic,
    calabi_quartic,
    classify_apex,
    equality_curve_ab,
    equality_curve_ac,
    polar_curve_r,
    solve_calabi,
    sweep_isosceles,
)
