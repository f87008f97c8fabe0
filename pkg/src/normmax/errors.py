"""Exception types raised across the package."""


class NormmaxError(Exception):
    """Base class for all package errors."""


class ParseError(NormmaxError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnboundedPolytope(NormmaxError):
    pass


class InfeasiblePolytope(NormmaxError):
    pass


class OriginNotInterior(NormmaxError):
    pass


class DimensionCapExceeded(NormmaxError):
    pass


class BallNotNormalized(NormmaxError):
    pass


class BallTooLarge(NormmaxError):
    """The grid ball would need more facets than the configured budget."""


class DependentGenerators(NormmaxError):
    pass


class NotSymmetric(NormmaxError):
    pass


class OddN(NormmaxError):
    pass


class NotInConvexPosition(NormmaxError):
    pass


class KTooLarge(NormmaxError):
    pass


class GapViolation(NormmaxError):
    """An exact optimum landed strictly between the NO and YES thresholds."""
