"""
Celery tasks for the atlas and the isosceles sweep

Work is split into one task per atlas row or per chunk of sweep angles.
Results are gathered in dispatch order, so the assembled output matches
the local back end exactly. The computation is pure, so nothing retries.
"""

import logging
from typing import List, Sequence, Tuple

from celery import group, shared_task

from src.atlas import AtlasRow, classify_row
from src.geometry.errors import NonPositiveInput
from src.solvers.calabi import SweepRow, SweepTable, sweep_angles, sweep_rows

logger = logging.getLogger(__name__)

SWEEP_CHUNK = 100


# --- Celery Tasks ---

@shared_task(bind=True)
def classify_apex_row(self, y: float, xs: List[float]) -> list:
    """
    Classify one atlas row

    Samples the classifier rejects come back as 'outside' rather than
    failing the row.
    """
    logger.debug("Task %s: atlas row y=%r (%d samples)", self.request.id, y, len(xs))
    try:
        return [row.as_list() for row in classify_row(y, xs)]
    except Exception:
        logger.exception("Task %s: atlas row y=%r failed", self.request.id, y)
        raise


@shared_task(bind=True)
def sweep_chunk(self, angles: List[float], leg: float) -> list:
    """Leg and base square areas for a chunk of apex angles"""
    logger.debug("Task %s: sweep chunk %r..%r", self.request.id, angles[0], angles[-1])
    try:
        return [[r.apex_deg, r.s_leg_area, r.s_base_area] for r in sweep_rows(angles, leg)]
    except Exception:
        logger.exception("Task %s: sweep chunk starting at %r failed", self.request.id, angles[0])
        raise


# --- Dispatch ---

def _app():
    # Creating the app makes it current, which binds the shared tasks to it
    from celery_app import app
    return app


def classify_rows_celery(grid: Sequence[Tuple[float, List[float]]]) -> List[AtlasRow]:
    _app()
    job = group(classify_apex_row.s(y, list(xs)) for y, xs in grid)
    results = job.apply_async().get()
    return [AtlasRow(*item) for row in results for item in row]


def sweep_celery(apex_min: float, apex_max: float, step: float, leg: float,
                 chunk: int = SWEEP_CHUNK) -> SweepTable:
    """
    sweep_isosceles with the angles split across Celery tasks

    Raises:
        InvalidRange: for a bad apex range or step
        NonPositiveInput: if leg <= 0
    """
    if not leg > 0:
        raise NonPositiveInput(f"Leg length must be positive, got {leg}")
    angles = sweep_angles(apex_min, apex_max, step)
    _app()
    job = group(sweep_chunk.s(angles[i:i + chunk], leg) for i in range(0, len(angles), chunk))
    results = job.apply_async().get()
    rows = tuple(SweepRow(*item) for part in results for item in part)
    return SweepTable(leg, rows)
