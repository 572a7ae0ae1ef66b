"""
Independent brute-force checks for the closed-form solvers

This package provides deterministic grid oracles for the maximal
parallelogram, rectangle and wedged rectangle, a bisection oracle for the
inscribed square, and the bracketed root finder the Calabi solver uses.
"""

from .brute_force import (
    brute_force_inscribed_square,
    brute_force_max_parallelogram,
    brute_force_max_rectangle,
    brute_force_max_wedged_rectangle,
    wedged_rectangle_scan,
)
from .grid import GridSpec, unit_grid
from .roots import find_root
