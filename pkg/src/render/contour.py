"""
Zero level sets of f(x, y) by marching squares
"""

from typing import Callable, List, Tuple

import numpy as np

Segment = Tuple[Tuple[float, float], Tuple[float, float]]


def _lerp(p0, p1, v0, v1):
    t = v0 / (v0 - v1)
    t = min(max(t, 0.0), 1.0)
    return (p0[0] + (p1[0] - p0[0]) * t, p0[1] + (p1[1] - p0[1]) * t)


def zero_segments(func: Callable, x_range: Tuple[float, float], y_range: Tuple[float, float],
                  nx: int = 200, ny: int = 200) -> List[Segment]:
    """
    Line segments approximating the curve func(x, y) = 0

    func is evaluated once on an (nx + 1) x (ny + 1) lattice and must accept
    numpy arrays. Cells are visited row by row so the output order is
    deterministic. Saddle cells are resolved with the cell-centre value.
    """
    xs = np.linspace(x_range[0], x_range[1], nx + 1)
    ys = np.linspace(y_range[0], y_range[1], ny + 1)
    grid_x, grid_y = np.meshgrid(xs, ys)
    values = func(grid_x, grid_y)
    positive = values > 0

    # Cells whose corners do not all share a sign
    corners = positive[:-1, :-1].astype(int) + positive[:-1, 1:] + positive[1:, 1:] + positive[1:, :-1]
    rows, cols = np.nonzero((corners > 0) & (corners < 4))

    segments = []
    for j, i in zip(rows, cols):
        pts = [(xs[i], ys[j]), (xs[i + 1], ys[j]), (xs[i + 1], ys[j + 1]), (xs[i], ys[j + 1])]
        vals = [values[j, i], values[j, i + 1], values[j + 1, i + 1], values[j + 1, i]]
        crossings = []
        for k in range(4):
            v0, v1 = vals[k], vals[(k + 1) % 4]
            if (v0 > 0) != (v1 > 0):
                crossings.append(_lerp(pts[k], pts[(k + 1) % 4], v0, v1))
        if len(crossings) == 2:
            segments.append((crossings[0], crossings[1]))
        elif len(crossings) == 4:
            centre = func((pts[0][0] + pts[1][0]) / 2, (pts[0][1] + pts[3][1]) / 2)
            # Edges are bottom, right, top, left; pair them around the
            # corner whose sign differs from the centre
            if (centre > 0) == (vals[0] > 0):
                segments.append((crossings[0], crossings[1]))
                segments.append((crossings[2], crossings[3]))
            else:
                segments.append((crossings[3], crossings[0]))
                segments.append((crossings[1], crossings[2]))
    return [((float(a[0]), float(a[1])), (float(b[0]), float(b[1]))) for a, b in segments]
