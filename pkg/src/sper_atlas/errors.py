"""Exception types raised across the package."""


class SperAtlasError(ValueError):
    """Base class for all domain errors."""


class RankMismatch(SperAtlasError):
    pass


class ZeroSeries(SperAtlasError, ZeroDivisionError):
    """Raised where the valuation or inverse of the zero series is requested."""


class NonIntegerSignedExponent(SperAtlasError):
    """A negative sign axis met an exponent coordinate that is not an integer."""


class ChartOnSupport(SperAtlasError):
    """A coordinate to be inverted lies in the support of the point."""


class InvalidChart(SperAtlasError):
    pass


class SupportObstruction(SperAtlasError):
    """A monomial substitution needs the inverse of a coordinate that vanishes."""


class MalformedDescriptor(SperAtlasError):
    pass


class ParseError(SperAtlasError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class SchemaError(SperAtlasError):
    """JSON input does not match the expected layout."""
