"""Exception hierarchy shared across the package."""


class TriangleMapError(Exception):
    """Base class for all package-specific errors."""


class DegenerateInputError(TriangleMapError):
    """Input lies outside the domain a routine is defined on."""


class PrecisionExhaustedError(TriangleMapError):
    """A certified decision could not be made at the available precision."""


class NotYetConvergedError(TriangleMapError):
    """Too few steps for a recovery formula to produce an estimate."""


class InconsistentInputError(TriangleMapError):
    """Structured data violates an identity it was promised to satisfy."""
