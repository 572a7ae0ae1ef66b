"""
Exceptions raised by the geometry, solver and oracle modules

Two families are kept apart because the command line maps them to
different exit codes:

- InvalidInput: the caller handed over bad data (exit code 1)
- NotApplicable: the data is fine but the requested construction does
  not exist for this triangle (exit code 2)
"""


class GeometryError(Exception):
    """Base class for every error raised by this package"""


class InvalidInput(GeometryError, ValueError):
    """Malformed or out-of-domain input"""


class NotApplicable(GeometryError):
    """A construction precondition does not hold for the given triangle"""


# --- Input errors ---

class NonFiniteCoordinate(InvalidInput):
    pass


class DegenerateTriangle(InvalidInput):
    pass


class InvalidAngles(InvalidInput):
    pass


class NonPositiveInput(InvalidInput):
    pass


class OutOfRange(InvalidInput):
    pass


class OutsideDomain(InvalidInput):
    pass


class InvalidRange(InvalidInput):
    pass


class InvalidGrid(InvalidInput):
    pass


class NoBracket(InvalidInput):
    pass


class ConfigurationError(InvalidInput):
    pass


# --- Applicability errors ---

class ObtuseBaseAngle(NotApplicable):
    pass


class NotAcute(NotApplicable):
    pass


class NotObtuse(NotApplicable):
    pass


class NotObtuseAtVertex(NotApplicable):
    pass


class NotObtuseOnBase(NotApplicable):
    pass


class BaseNotAdjacent(NotApplicable):
    pass


class SidesNotSorted(NotApplicable):
    pass
