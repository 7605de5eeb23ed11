"""Exception types shared across the package."""


class QuadfibError(Exception):
    """Base class for every library-specific error."""


class NotPositiveError(QuadfibError, ValueError):
    """An integer argument was required to be at least 2 (or 1)."""


class PerfectSquareError(QuadfibError, ValueError):
    """d was a perfect square, so Q(sqrt(d)) would collapse to Q."""


class NotSquarefreeError(QuadfibError, ValueError):
    """d was divisible by the square of a prime."""


class MixedFieldsError(QuadfibError, ValueError):
    """Two operands belonged to different quadratic fields."""


class ZeroExponentError(QuadfibError, ValueError):
    """A unit power with exponent 0 is +-1 and cannot seed a sequence."""


class ResourceLimitError(QuadfibError, RuntimeError):
    """A continued-fraction period exceeded the configured cap."""


class ZeroIrrationalPartError(QuadfibError, ValueError):
    """A sequence context needs a unit with nonzero sqrt(d)-coordinate."""


class ZeroTraceError(QuadfibError, ValueError):
    """A sequence context needs a unit with nonzero rational coordinate."""


class NonPositiveIndexError(QuadfibError, ValueError):
    """The binomial-sum formulas are defined for indices n >= 1 only."""


class InvalidRangeError(QuadfibError, ValueError):
    """An index range had its lower end above its upper end."""


class UnknownIdentityError(QuadfibError, KeyError):
    """An identity tag is not part of the catalog."""


class OutsideRadiusError(QuadfibError, ValueError):
    """A series argument lay outside the radius of convergence."""


class PoleError(QuadfibError, ZeroDivisionError):
    """A closed-form denominator vanished at the evaluation point."""


class OeisError(QuadfibError):
    """Base class for OEIS client failures."""


class NetworkError(OeisError):
    """Downloading a b-file failed after the retry."""


class BFileParseError(OeisError, ValueError):
    """A b-file did not follow the "index value" line format."""


class CacheMissError(OeisError, FileNotFoundError):
    """Offline mode was requested but the b-file is not cached."""
