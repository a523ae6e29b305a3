"""Exception hierarchy for orbiflip.

Every error raised by the library derives from OrbiflipError so callers can
catch the whole family at once.  Names follow the operation contracts.
"""


class OrbiflipError(Exception):
    """Base class for all orbiflip errors."""


class ParseError(OrbiflipError, ValueError):
    """Malformed weight-sequence text or CLI argument."""


class NonPositiveKLevel(OrbiflipError):
    """Canonical extension requested for a sequence with sum(a) - sum(b) <= 0."""


class IndexOutOfRange(OrbiflipError, IndexError):
    """Chart or divisor index outside 1..m resp. 1..n."""


class TooLargeGroup(OrbiflipError):
    """Chart group order exceeds the enumeration cap for smallness checks."""


class InconsistentDegrees(OrbiflipError):
    """Complex differentials or term data violate the grading constraints."""


class ResolutionConstructionFailure(OrbiflipError):
    """Internal guard: a built resolution failed its strand verification."""


class WrongSide(OrbiflipError):
    """Divisor or object referenced on a space where it does not live."""


class BoxTooLarge(OrbiflipError):
    """Character enumeration would exceed the configured size limit."""


class PushforwardNotClosedForm(OrbiflipError):
    """A term's pushforward left the closed-form twist ranges.

    Carries the offending (p, q) pair when raised from functor evaluation.
    """

    def __init__(self, message: str, pq=None):
        super().__init__(message)
        self.pq = pq


class PreconditionKLevel(OrbiflipError):
    """Composite functor requested with sum(a) > sum(b); swap sides instead."""


class UnsupportedWeights(OrbiflipError):
    """Operation restricted to unit weights on the relevant side."""


class Unsupported(OrbiflipError):
    """Suite or operation not applicable to the given sequence."""
