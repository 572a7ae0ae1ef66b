"""
Sampling the apex frame by size pattern

The canonical half of the apex domain (x <= -1/2, inside the unit circle
about C, y > 0) is sampled on a cell-centred grid. Every sample is
classified with classify_apex; rows come out ordered by (y, x) whichever
back end did the work.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.geometry.errors import GeometryError, InvalidGrid
from src.oracle.grid import GridSpec
from src.solvers.calabi import ApexPoint, classify_apex

logger = logging.getLogger(__name__)

MIN_ATLAS_GRID = 8
ATLAS_X_RANGE = (-1.0, -0.5)
ATLAS_Y_RANGE = (0.0, math.sqrt(3) / 2)
OUTSIDE = "outside"


@dataclass(frozen=True)
class AtlasRow:
    """One classified sample: apex (x, y), triangle class and size pattern"""
    x: float
    y: float
    triangle_class: str
    pattern: str

    @property
    def outside(self) -> bool:
        return self.triangle_class == OUTSIDE

    def as_list(self) -> list:
        return [self.x, self.y, self.triangle_class, self.pattern]


def atlas_grid(nx: int, ny: int) -> List[Tuple[float, List[float]]]:
    """
    Sample rows (y, xs) of the canonical half inside the unit circle about C

    Raises:
        InvalidGrid: if nx or ny is below 8
    """
    if nx < MIN_ATLAS_GRID or ny < MIN_ATLAS_GRID:
        raise InvalidGrid(f"Atlas grid must be at least {MIN_ATLAS_GRID} x {MIN_ATLAS_GRID}, got {nx} x {ny}")
    xs = [float(x) for x in GridSpec(nx, (ATLAS_X_RANGE,)).samples(0)]
    ys = [float(y) for y in GridSpec(ny, (ATLAS_Y_RANGE,)).samples(0)]
    rows = []
    for y in ys:
        inside = [x for x in xs if x * x + y * y <= 1.0]
        if inside:
            rows.append((y, inside))
    return rows


def classify_point(x: float, y: float) -> AtlasRow:
    try:
        label = classify_apex(ApexPoint(x, y))
    except GeometryError as e:
        logger.debug("Apex (%r, %r) not classified: %s", x, y, e)
        return AtlasRow(x, y, OUTSIDE, "")
    return AtlasRow(x, y, str(label.triangle_class), label.pattern)


def classify_row(y: float, xs: Sequence[float]) -> List[AtlasRow]:
    return [classify_point(x, y) for x in xs]


def build_atlas(nx: int, ny: int, backend: str = "local") -> List[AtlasRow]:
    """
    Classify every atlas sample

    Args:
        nx (int): samples across x in [-1, -1/2]
        ny (int): samples across y in (0, sqrt(3)/2]
        backend (str): 'local' or 'celery' (one task per row)

    Returns:
        list: AtlasRow objects ordered by (y, x)
    """
    grid = atlas_grid(nx, ny)
    if backend == "celery":
        from src.tasks import classify_rows_celery
        rows = classify_rows_celery(grid)
    else:
        rows = [r for y, xs in grid for r in classify_row(y, xs)]
    logger.info("Classified %d atlas samples in %d rows", len(rows), len(grid))
    return rows


def census(rows: Sequence[AtlasRow]) -> Counter:
    """How many samples fall in each (class, pattern) combination"""
    return Counter((r.triangle_class, r.pattern) for r in rows)
