"""
Calabi's triangle and the map of enclosed-square orderings

Calabi's triangle is the obtuse isosceles triangle whose three enclosed
squares (one inscribed on the base, two wedged on the legs) are equal.
With legs 1 the base a is the largest root of 2a^3 - 2a^2 - 3a + 2 = 0.

The second half of the module works in the normalised apex frame:
C = (0, 0), B = (-1, 0), a = 1 and the apex A free in the upper half plane.
Two cubic curves split that frame by which enclosed square is largest.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from src.geometry.core import (
    Point,
    SideId,
    Triangle,
    TriangleClass,
    TriangleKind,
    Vertex,
    make_triangle,
)
from src.geometry.errors import InvalidRange, NonPositiveInput, OutOfRange, OutsideDomain
from src.oracle.roots import find_root
from src.solvers.inscribed import inscribed_square_side
from src.solvers.wedged import enclosed_square_triple, wedged_square_side

logger = logging.getLogger(__name__)

CALABI_BRACKET = (1.5, 1.6)
BISECTION_TOL = 1e-6
NEWTON_TOL = 1e-14

# Comparisons of square sides in the apex frame count as equal within this
# multiple of the base length (a = 1 there).
EPS_CMP = 1e-9
# Slack on the apex-domain boundary circles.
EPS_DOMAIN = 1e-12

# Sign conventions of the two equality cubics, fixed by probing
# (-0.5, 0.3), well below the Calabi point: both cubics are negative there
# and s_a is the largest square. A positive value means the named side's
# square beats s_a.
CURVE_AB_POSITIVE_FAVOURS = SideId.b
CURVE_AC_POSITIVE_FAVOURS = SideId.c

FRAME_C = Point(0.0, 0.0)
FRAME_B = Point(-1.0, 0.0)
FRAME_D = Point(-0.5, 0.0)


# === Calabi's triangle ===

def calabi_quartic(a: float) -> float:
    """2a^4 - 6a^3 + a^2 + 8a - 4; a = 2 is an extraneous root"""
    return (((2 * a - 6) * a + 1) * a + 8) * a - 4


def calabi_cubic(a: float) -> float:
    """2a^3 - 2a^2 - 3a + 2; the quartic divided by (a - 2)"""
    return ((2 * a - 2) * a - 3) * a + 2


def calabi_cubic_derivative(a: float) -> float:
    return (6 * a - 4) * a - 3


@dataclass(frozen=True)
class CalabiSolution:
    """
    Calabi's triangle with legs 1

    ratio is the base (longest side) over a leg (shortest side), theta the
    base angle, apex_angle the obtuse angle, h_a the height on the base and
    s the common side of the three enclosed squares.
    """
    ratio: float
    theta: float
    apex_angle: float
    h_a: float
    s: float
    s_wedged: float

    @property
    def theta_degrees(self):
        return math.degrees(self.theta)

    @property
    def apex_degrees(self):
        return math.degrees(self.apex_angle)

    @property
    def residual(self):
        return calabi_cubic(self.ratio)

    def h_a_from_ratio(self) -> float:
        """
        (a^2 - 2a) / (2 - 2a), the height from the equal-squares condition

        At the root both numerator and denominator are negative; the
        quotient is kept in that form rather than flipping signs.
        """
        a = self.ratio
        return (a * a - 2 * a) / (2 - 2 * a)

    def apex_point(self) -> "ApexPoint":
        """The apex in the normalised frame (base scaled to 1)"""
        return ApexPoint(-0.5, self.h_a / self.ratio)

    def triangle(self) -> Triangle:
        """Calabi's triangle with legs 1, apex at A"""
        half = self.ratio / 2
        return make_triangle(Point(0.0, self.h_a), Point(-half, 0.0), Point(half, 0.0))


@lru_cache(maxsize=None)
def solve_calabi() -> CalabiSolution:
    """
    Solve for Calabi's triangle

    Bisection brackets the largest root of the cubic in [1.5, 1.6] to 1e-6,
    then Newton steps polish it to 1e-14.
    """
    ratio = find_root(calabi_cubic, *CALABI_BRACKET, tol=BISECTION_TOL,
                      fprime=calabi_cubic_derivative, polish_tol=NEWTON_TOL)
    theta = math.acos(ratio / 2)
    h_a = math.sqrt(1 - ratio * ratio / 4)
    solution = CalabiSolution(
        ratio=ratio,
        theta=theta,
        apex_angle=math.pi - 2 * theta,
        h_a=h_a,
        s=inscribed_square_side(h_a, ratio),
        s_wedged=wedged_square_side(1.0, theta),
    )
    logger.debug("Calabi ratio %.16g, cubic residual %.3g", ratio, solution.residual)
    return solution


# === Apex frame ===

@dataclass(frozen=True)
class ApexPoint:
    """
    A candidate apex A in the frame C = (0, 0), B = (-1, 0)

    The canonical half x <= -1/2 gives a >= b >= c; the other half is its
    mirror image about x = -1/2 with b and c swapped.
    """
    x: float
    y: float

    def point(self) -> Point:
        return Point(self.x, self.y)

    def reflect(self) -> "ApexPoint":
        return ApexPoint(-1.0 - self.x, self.y)

    def canonical(self) -> "ApexPoint":
        return self.reflect() if self.x > -0.5 else self

    def in_domain(self) -> bool:
        """Upper half plane, and BC is a longest side"""
        p = self.point()
        return (self.y > 0
                and p.distance(FRAME_C) <= 1 + EPS_DOMAIN
                and p.distance(FRAME_B) <= 1 + EPS_DOMAIN)

    def triangle(self) -> Triangle:
        return make_triangle(self.point(), FRAME_B, FRAME_C)

    def semicircle_class(self) -> TriangleClass:
        """Angle at A from the circle on BC as diameter"""
        gap = self.point().distance(FRAME_D) - 0.5
        if abs(gap) <= EPS_DOMAIN:
            return TriangleClass(TriangleKind.RIGHT, Vertex.A)
        if gap < 0:
            return TriangleClass(TriangleKind.OBTUSE, Vertex.A)
        return TriangleClass(TriangleKind.ACUTE)


def _xy(p) -> Tuple[float, float]:
    if isinstance(p, (ApexPoint, Point)):
        return p.x, p.y
    return p[0], p[1]


def cubic_ab(x, y):
    """y^3 + x^2 y + 2x^2 + 2y^2 + 2x; works elementwise on numpy arrays"""
    return y ** 3 + x * x * y + 2 * x * x + 2 * y * y + 2 * x


def cubic_ac(x, y):
    """The s_a = s_c cubic: cubic_ab mirrored about x = -1/2"""
    u = x + 1
    return y ** 3 + u * u * y + 2 * u * u + 2 * y * y - 2 * u


def equality_curve_ab(p) -> float:
    """Value of the s_a = s_b cubic at an apex; positive where s_b > s_a"""
    return cubic_ab(*_xy(p))


def equality_curve_ac(p) -> float:
    """Value of the s_a = s_c cubic at an apex; positive where s_c > s_a"""
    return cubic_ac(*_xy(p))


def polar_curve_r(mu: float) -> float:
    """
    r = 1 - cot(mu/2): the s_a = s_b locus in polar form about C

    mu = pi - theta is measured from the positive x axis.

    Raises:
        OutOfRange: unless pi/2 < mu < pi, where r runs over (0, 1)
    """
    if not math.pi / 2 < mu < math.pi:
        raise OutOfRange(f"mu must lie strictly between pi/2 and pi, got {mu}")
    return 1 - 1 / math.tan(mu / 2)


def polar_point(mu: float) -> Point:
    r = polar_curve_r(mu)
    return Point(r * math.cos(mu), r * math.sin(mu))


class Comparison(str, Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"

    @classmethod
    def of(cls, x: float, y: float, eps: float) -> "Comparison":
        if abs(x - y) <= eps:
            return cls.EQUAL
        return cls.LESS if x < y else cls.GREATER


@dataclass(frozen=True)
class RegionLabel:
    """
    Size pattern of (s_a vs s_b, s_a vs s_c, s_b vs s_c) plus the class
    read off the semicircle on BC
    """
    ab: Comparison
    ac: Comparison
    bc: Comparison
    triangle_class: TriangleClass

    @property
    def pattern(self) -> str:
        return self.ab.value + self.ac.value + self.bc.value

    def largest(self) -> Tuple[SideId, ...]:
        """Sides carrying the largest square (several when tied)"""
        beats = {
            SideId.a: [self.ab is not Comparison.LESS, self.ac is not Comparison.LESS],
            SideId.b: [self.ab is not Comparison.GREATER, self.bc is not Comparison.LESS],
            SideId.c: [self.ac is not Comparison.GREATER, self.bc is not Comparison.GREATER],
        }
        return tuple(side for side, wins in beats.items() if all(wins))

    def is_consistent(self) -> bool:
        """True when the three comparisons can come from three real numbers"""
        rank = {Comparison.LESS: -1, Comparison.EQUAL: 0, Comparison.GREATER: 1}
        for s_a, s_b, s_c in _ORDER_WITNESSES:
            if (rank[Comparison.of(s_a, s_b, 0)] == rank[self.ab]
                    and rank[Comparison.of(s_a, s_c, 0)] == rank[self.ac]
                    and rank[Comparison.of(s_b, s_c, 0)] == rank[self.bc]):
                return True
        return False

    def mirrored(self) -> "RegionLabel":
        """The label after swapping the roles of b and c"""
        flip = {Comparison.LESS: Comparison.GREATER, Comparison.EQUAL: Comparison.EQUAL,
                Comparison.GREATER: Comparison.LESS}
        return RegionLabel(self.ac, self.ab, flip[self.bc], self.triangle_class)


# Every weak ordering of three values, used to test pattern consistency
_ORDER_WITNESSES = [(x, y, z) for x in range(3) for y in range(3) for z in range(3)]


def classify_apex(p: ApexPoint, eps_cmp: float = EPS_CMP) -> RegionLabel:
    """
    Compare the three enclosed squares for the apex p

    Raises:
        OutsideDomain: if p is not in the upper half plane inside both unit
            circles about B and C (BC must be a longest side)
    """
    if not isinstance(p, ApexPoint):
        p = ApexPoint(*_xy(p))
    if not p.in_domain():
        raise OutsideDomain(f"Apex ({p.x}, {p.y}) is outside the region where BC is a longest side")
    squares = enclosed_square_triple(p.triangle())
    return RegionLabel(
        Comparison.of(squares.s_a, squares.s_b, eps_cmp),
        Comparison.of(squares.s_a, squares.s_c, eps_cmp),
        Comparison.of(squares.s_b, squares.s_c, eps_cmp),
        p.semicircle_class(),
    )


# === Isosceles sweep ===

def isosceles_triangle(apex_deg: float, leg: float) -> Triangle:
    """Isosceles triangle with apex A, legs AB = AC = leg, base BC on the x axis"""
    half = math.radians(apex_deg) / 2
    return make_triangle(
        Point(0.0, leg * math.cos(half)),
        Point(-leg * math.sin(half), 0.0),
        Point(leg * math.sin(half), 0.0),
    )


def leg_and_base_squares(apex_deg: float, leg: float) -> Tuple[float, float]:
    squares = enclosed_square_triple(isosceles_triangle(apex_deg, leg))
    return squares.s_b, squares.s_a


@dataclass(frozen=True)
class SweepRow:
    apex_deg: float
    s_leg_area: float
    s_base_area: float

    @property
    def diff(self):
        return self.s_leg_area - self.s_base_area


def sweep_rows(angles: Sequence[float], leg: float) -> List[SweepRow]:
    rows = []
    for angle in angles:
        s_leg, s_base = leg_and_base_squares(angle, leg)
        rows.append(SweepRow(angle, s_leg * s_leg, s_base * s_base))
    return rows


@dataclass(frozen=True)
class SweepTable:
    leg: float
    rows: Tuple[SweepRow, ...]

    def crossings(self) -> List[Tuple[float, float]]:
        """Consecutive apex angles between which s_leg^2 - s_base^2 changes sign"""
        brackets = []
        for prev, row in zip(self.rows, self.rows[1:]):
            if prev.diff == 0:
                continue
            if row.diff == 0 or (prev.diff > 0) != (row.diff > 0):
                brackets.append((prev.apex_deg, row.apex_deg))
        return brackets

    def refine_crossover(self, bracket: Optional[Tuple[float, float]] = None, tol: float = 1e-10) -> Optional[float]:
        """Apex angle (degrees) where leg and base squares are equal, None without a crossing"""
        if bracket is None:
            found = self.crossings()
            if not found:
                return None
            bracket = found[0]

        def diff(angle):
            s_leg, s_base = leg_and_base_squares(angle, self.leg)
            return s_leg * s_leg - s_base * s_base

        return find_root(diff, bracket[0], bracket[1], tol=tol)


def sweep_angles(apex_min: float, apex_max: float, step: float) -> List[float]:
    """
    Apex angles min, min + step, ... up to max

    Raises:
        InvalidRange: unless 90 < min <= max < 180 and step > 0
    """
    if not (90 < apex_min <= apex_max < 180):
        raise InvalidRange(f"Apex range must satisfy 90 < min <= max < 180, got [{apex_min}, {apex_max}]")
    if not step > 0:
        raise InvalidRange(f"Step must be positive, got {step}")
    count = int(math.floor((apex_max - apex_min) / step + 1e-9)) + 1
    return [round(apex_min + i * step, 10) for i in range(count)]


def sweep_isosceles(apex_min: float, apex_max: float, step: float, leg: float) -> SweepTable:
    """
    Tabulate leg-square and base-square areas of obtuse isosceles triangles

    Rows come in ascending apex angle.

    Raises:
        InvalidRange: for a bad apex range or step
        NonPositiveInput: if leg <= 0
    """
    if not leg > 0:
        raise NonPositiveInput(f"Leg length must be positive, got {leg}")
    angles = sweep_angles(apex_min, apex_max, step)
    return SweepTable(leg, tuple(sweep_rows(angles, leg)))
