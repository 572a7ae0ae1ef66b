"""
Triangle reports and the text formats the command line writes

A Report is plain data (dicts, lists, floats, strings) so that it
serialises to JSON and back without loss. CSV numbers use 9 significant
digits and a '.' decimal point regardless of locale.
"""

import csv
import io
import json
import logging
import math
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Sequence

from src.geometry.core import SideId, Triangle, TriangleKind, Vertex, angle_at, classify, height
from src.geometry.errors import InvalidInput
from src.geometry.shapes import PolygonSolution
from src.oracle.brute_force import (
    brute_force_inscribed_square,
    brute_force_max_parallelogram,
    brute_force_max_rectangle,
    brute_force_max_wedged_rectangle,
)
from src.oracle.grid import unit_grid
from src.solvers.calabi import CalabiSolution, SweepTable
from src.solvers.inscribed import (
    admissible_sides,
    inscribed_square_side,
    inscribed_squares,
    max_parallelograms,
    max_rectangle_on,
    max_rectangles,
)
from src.solvers.wedged import construct_wedged_square, enclosed_square_triple, max_wedged_rectangle

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
SWEEP_HEADER = ["apex_deg", "s_leg_area", "s_base_area", "diff"]
ATLAS_HEADER = ["x", "y", "class", "pattern"]


def fmt(value: float) -> str:
    """9 significant digits, locale independent"""
    return format(value, ".9g")


# === Report ===

@dataclass
class Report:
    """Everything computed for one triangle, optionally with oracle checks"""
    triangle: Dict
    parallelograms: List[Dict]
    rectangles: List[Dict]
    squares: Dict
    inscribed_squares: List[Dict]
    wedged: Optional[Dict] = None
    verification: Optional[Dict] = None
    schema_version: int = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return self.verification is None or self.verification["passed"]

    def to_dict(self) -> Dict:
        return asdict(self)

    def to_json(self) -> str:
        # allow_nan=False turns a non-finite number into an error
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, allow_nan=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        """
        Parse a report written by to_json

        Raises:
            InvalidInput: if the text is not a version 1 report
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidInput(f"Report is not valid JSON: {e}") from None
        if not isinstance(data, dict) or data.get("schema_version") != SCHEMA_VERSION:
            raise InvalidInput(f"Expected a report with schema_version {SCHEMA_VERSION}")
        try:
            return cls(**data)
        except TypeError as e:
            raise InvalidInput(f"Malformed report: {e}") from None


def _xy(p) -> List[float]:
    return [p.x, p.y]


def solution_dict(s: PolygonSolution) -> Dict:
    return {
        "kind": s.kind.value,
        "bases": [b.value for b in s.bases],
        "anchor": s.anchor.value if s.anchor else None,
        "area": s.area,
        "vertices": [_xy(p) for p in s.vertices],
        "params": {k: float(v) for k, v in sorted(s.params.items())},
    }


def triangle_dict(t: Triangle) -> Dict:
    return {
        "vertices": {v.value: _xy(t.vertex(v)) for v in Vertex},
        "sides": {s.value: t.side_length(s) for s in SideId},
        "heights": {s.value: height(t, s) for s in SideId},
        "angles_deg": {v.value: math.degrees(angle_at(t, v)) for v in Vertex},
        "class": str(classify(t)),
        "orientation": t.orientation,
        "area": t.area,
    }


def _wedged_section(t: Triangle) -> Optional[Dict]:
    cls = classify(t)
    if cls.kind is not TriangleKind.OBTUSE:
        return None
    legs = SideId.adjacent_to(cls.vertex)
    return {
        "vertex": cls.vertex.value,
        "squares": [solution_dict(construct_wedged_square(t, cls.vertex, side)) for side in legs],
        "rectangles": [solution_dict(max_wedged_rectangle(t, side)) for side in legs],
    }


def _check(name: str, base: Optional[SideId], closed: float, oracle: float, tolerance: float) -> Dict:
    delta = abs(closed - oracle) / closed
    return {
        "name": name,
        "base": base.value if base else None,
        "closed": closed,
        "oracle": oracle,
        "delta": delta,
        "ok": delta <= tolerance,
    }


def verify(t: Triangle, grid: int, tolerance: float) -> Dict:
    """
    Compare every closed form with its brute-force oracle

    Deltas are relative to the closed-form value.
    """
    checks = []
    oracle, _ = brute_force_max_parallelogram(t, unit_grid(grid, 2))
    checks.append(_check("parallelogram", None, max_parallelograms(t)[0].area, oracle, tolerance))

    for side in admissible_sides(t):
        oracle, _ = brute_force_max_rectangle(t, side, unit_grid(grid))
        checks.append(_check("rectangle", side, max_rectangle_on(t, side).area, oracle, tolerance))
        closed = inscribed_square_side(height(t, side), t.side_length(side))
        checks.append(_check("inscribed_square", side, closed, brute_force_inscribed_square(t, side), tolerance))

    cls = classify(t)
    if cls.kind is TriangleKind.OBTUSE:
        for side in SideId.adjacent_to(cls.vertex):
            oracle, _ = brute_force_max_wedged_rectangle(t, side, unit_grid(grid))
            checks.append(_check("wedged_rectangle", side, max_wedged_rectangle(t, side).area, oracle, tolerance))

    failed = [c for c in checks if not c["ok"]]
    for c in failed:
        logger.warning("Oracle check %s on %s off by %.3g (tolerance %g)", c["name"], c["base"], c["delta"], tolerance)
    return {"grid": grid, "tolerance": tolerance, "checks": checks, "passed": not failed}


def build_report(t: Triangle, verify_grid: Optional[int] = None, tolerance: float = 1e-3) -> Report:
    """
    Solve every construction on the triangle

    Args:
        t (Triangle): the triangle
        verify_grid (int, optional): run the oracles on this grid when given
        tolerance (float): largest relative oracle delta that still passes

    Returns:
        Report: the solved polygons, squares and optional oracle checks
    """
    squares = enclosed_square_triple(t)
    report = Report(
        triangle=triangle_dict(t),
        parallelograms=[solution_dict(s) for s in max_parallelograms(t)],
        rectangles=[solution_dict(s) for s in max_rectangles(t)],
        squares={s.value: {"side": squares.side(s), "kind": squares.kind(s).value} for s in SideId},
        inscribed_squares=[solution_dict(s) for s in inscribed_squares(t)],
        wedged=_wedged_section(t),
    )
    if verify_grid is not None:
        report.verification = verify(t, verify_grid, tolerance)
    return report


# === Calabi ===

def calabi_dict(solution: CalabiSolution) -> Dict:
    e = solution.apex_point()
    return {
        "ratio": solution.ratio,
        "theta_deg": solution.theta_degrees,
        "apex_deg": solution.apex_degrees,
        "h_a": solution.h_a,
        "square_side": solution.s,
        "residual": solution.residual,
        "apex_point": [e.x, e.y],
    }


def calabi_text(solution: CalabiSolution, digits: int) -> str:
    """Fixed-point summary with `digits` decimals; the residual in exponent form"""
    values = calabi_dict(solution)
    lines = [f"{name} {values[name]:.{digits}f}" for name in ("ratio", "theta_deg", "apex_deg", "h_a", "square_side")]
    lines.append(f"residual {values['residual']:.3e}")
    return "\n".join(lines) + "\n"


# === CSV ===

def _csv(header: Sequence[str], rows) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


def sweep_csv(table: SweepTable) -> str:
    """
    One row per apex angle, then `crossover,lo,hi,refined`

    The summary row is `crossover,,,` when the difference never changes sign.
    """
    rows = [[fmt(r.apex_deg), fmt(r.s_leg_area), fmt(r.s_base_area), fmt(r.diff)] for r in table.rows]
    brackets = table.crossings()
    if brackets:
        if len(brackets) > 1:
            logger.warning("Sweep changes sign %d times; summarising the first", len(brackets))
        lo, hi = brackets[0]
        rows.append(["crossover", fmt(lo), fmt(hi), fmt(table.refine_crossover(brackets[0]))])
    else:
        rows.append(["crossover", "", "", ""])
    return _csv(SWEEP_HEADER, rows)


def atlas_csv(rows) -> str:
    return _csv(ATLAS_HEADER, [[fmt(r.x), fmt(r.y), r.triangle_class, r.pattern] for r in rows])


def parse_csv(text: str) -> List[List[str]]:
    return list(csv.reader(io.StringIO(text)))
