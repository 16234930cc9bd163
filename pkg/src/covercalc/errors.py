"""Exception types shared across the package."""


class CovercalcError(Exception):
    """Base class for all covercalc errors."""


class IdenticalLines(CovercalcError):
    """Two lines expected to be distinct are equal."""


class UnknownPreset(CovercalcError):
    """Requested preset name is not in the catalog."""


class ValidationError(CovercalcError):
    """Input data violates a structural invariant."""


class ParseError(CovercalcError):
    """Config text could not be parsed."""


class BadPointError(CovercalcError):
    """The cover is singular over at least one point of the arrangement."""

    def __init__(self, message: str, points=()):
        super().__init__(message)
        self.points = tuple(points)


class NoetherViolation(CovercalcError):
    """K^2 + e is not divisible by 12; the input data is inconsistent."""


class NegativeIrregularity(CovercalcError):
    """Computed irregularity is negative; the input data is inconsistent."""


class NotBig(CovercalcError):
    """The canonical pushforward divisor has non-positive self-intersection."""


class ChartFailure(CovercalcError):
    """No affine chart avoiding the branch lines and singular points was found."""


class UnsupportedGroup(CovercalcError):
    """Operation is only implemented for two-element cyclic factors."""
