"""Exception types shared across the package."""


class GprcError(Exception):
    """Base class for all package errors."""


class MalformedInput(GprcError):
    """Text does not describe a generalized permutation."""


class EmptyLine(GprcError):
    """An operation would leave one of the two lines empty."""


class UnknownSymbol(GprcError):
    """A referenced symbol is not part of the permutation's alphabet."""


class NotCylindrical(GprcError):
    """The permutation is not of single-cylinder form."""


class IndexOutOfRange(GprcError):
    """A basepoint index does not address a position of the cyclic word."""


class NotSuspendable(GprcError):
    """No strict suspension data exists (the permutation is reducible)."""


class RoundingUnstable(GprcError):
    """A cone angle landed too far from a multiple of pi."""


class LengthInfeasible(GprcError):
    """The cylinder diagram admits no positive saddle-connection lengths."""


class NotTruePermutation(GprcError):
    """Operation requires a true permutation (one occurrence per line)."""


class OddDegrees(GprcError):
    """Spin parity is only defined when every zero has even degree."""


class DegenerateInput(GprcError):
    """The suspension carries marked points (degree-0 singularities)."""


class Reducible(GprcError):
    """A Rauzy operation pipeline was seeded with a reducible permutation."""


class InvalidStratum(GprcError):
    """Degree data violates the stratum sum relations."""


class EmptyStratum(GprcError):
    """The requested stratum is one of the four empty ones."""


class NoSuchComponent(GprcError):
    """The stratum exists but has no component with the requested label."""


class UnsupportedLabel(GprcError):
    """The label is never valid for this kind of stratum."""


class NotApplicable(GprcError):
    """The closed-form parity only covers the two hyperelliptic shapes."""
