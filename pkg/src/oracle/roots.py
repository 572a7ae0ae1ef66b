"""
Bracketed root finding: bisection with an optional Newton polish
"""

import logging
import math
from typing import Callable, Optional

from src.geometry.errors import NoBracket

logger = logging.getLogger(__name__)

MAX_BISECTIONS = 200
MAX_NEWTON_STEPS = 50


def find_root(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12,
              fprime: Optional[Callable[[float], float]] = None, polish_tol: float = 1e-14) -> float:
    """
    Find a root of f inside [lo, hi]

    Bisection shrinks the bracket below `tol`. When `fprime` is given, Newton
    steps then polish the midpoint until the step is below `polish_tol`;
    any step that would leave the bracket is dropped and bisection's answer
    kept.

    Args:
        f (callable): continuous on [lo, hi]
        lo, hi (float): bracket with f(lo) * f(hi) <= 0
        tol (float): bracket width at which bisection stops
        fprime (callable, optional): derivative of f for the polish
        polish_tol (float): Newton step size at which polishing stops

    Returns:
        float: the root estimate

    Raises:
        NoBracket: if f(lo) and f(hi) have the same strict sign
    """
    if lo > hi:
        lo, hi = hi, lo
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise NoBracket(f"f({lo}) = {flo} and f({hi}) = {fhi} have the same sign")

    a, b = lo, hi
    for _ in range(MAX_BISECTIONS):
        if b - a <= tol:
            break
        mid = (a + b) / 2
        fmid = f(mid)
        if fmid == 0:
            return mid
        if math.copysign(1.0, fmid) == math.copysign(1.0, flo):
            a, flo = mid, fmid
        else:
            b = mid
    x = (a + b) / 2

    if fprime is None:
        return x

    for step in range(MAX_NEWTON_STEPS):
        slope = fprime(x)
        if slope == 0:
            break
        dx = f(x) / slope
        candidate = x - dx
        if not lo <= candidate <= hi:
            logger.warning("Newton step left [%s, %s]; keeping bisection estimate", lo, hi)
            break
        x = candidate
        if abs(dx) <= polish_tol:
            logger.debug("Newton polish converged after %d steps", step + 1)
            break
    return x
