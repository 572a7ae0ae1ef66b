"""
SVG output for the command line

- contour: marching-squares zero sets of the apex-frame cubics
- svg: construction figures and the apex atlas picture
"""

from .contour import zero_segments
from .svg import FIGURES, DiagramCanvas, atlas_svg, figure_svg
