"""
Runtime configuration read from the environment (and a .env file)

Only operational knobs live here. Numeric tolerances are module constants
in the geometry and solver code so results do not depend on the machine.
"""

import math
import os

from dotenv import load_dotenv

from src.geometry.errors import ConfigurationError

# Load environment variables from .env file FIRST
load_dotenv()

ATLAS_BACKENDS = ("local", "celery")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _int(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigurationError(f"{name} must be at least {minimum}, got {value}")
    return value


def _float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        value = float(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be a number, got {raw!r}") from None
    if not (math.isfinite(value) and value > 0):
        raise ConfigurationError(f"{name} must be a positive finite number, got {raw!r}")
    return value


def _choice(name: str, default: str, choices, upper: bool = False) -> str:
    value = (os.getenv(name) or default).strip()
    if upper:
        value = value.upper()
    if value not in choices:
        raise ConfigurationError(f"{name} must be one of {', '.join(choices)}, got {value!r}")
    return value


ORACLE_GRID = _int("ENCLOSE_ORACLE_GRID", 1000, minimum=2)
VERIFY_TOLERANCE = _float("ENCLOSE_VERIFY_TOLERANCE", 1e-3)
ATLAS_BACKEND = _choice("ENCLOSE_ATLAS_BACKEND", "local", ATLAS_BACKENDS)
LOG_LEVEL = _choice("ENCLOSE_LOG_LEVEL", "WARNING", LOG_LEVELS, upper=True)
CELERY_BROKER_URL = os.getenv("CELERY_BROKER_URL") or None
