"""
Deterministic sampling grids for the brute-force oracles
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.geometry.errors import InvalidGrid

UNIT_INTERVAL = (0.0, 1.0)


@dataclass(frozen=True)
class GridSpec:
    """
    n subdivisions per parameter over closed bounds

    Samples sit at cell centres, lo + (i + 1/2) * (hi - lo) / n, so the grid
    is reproducible and never lands exactly on the optimum; refining n
    strictly shrinks the gap to the closed form.
    """
    n: int
    bounds: Tuple[Tuple[float, float], ...] = (UNIT_INTERVAL, UNIT_INTERVAL)

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise InvalidGrid(f"Grid needs at least 2 subdivisions, got {self.n}")
        if not self.bounds:
            raise InvalidGrid("Grid needs at least one parameter range")
        for lo, hi in self.bounds:
            if not lo <= hi:
                raise InvalidGrid(f"Empty parameter range [{lo}, {hi}]")

    def samples(self, axis: int = 0) -> np.ndarray:
        lo, hi = self.bounds[axis]
        return lo + (np.arange(self.n) + 0.5) * ((hi - lo) / self.n)


def unit_grid(n: int, dims: int = 1) -> GridSpec:
    return GridSpec(n, (UNIT_INTERVAL,) * dims)
