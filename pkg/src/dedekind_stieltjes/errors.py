"""Exception hierarchy.

Validation errors signal bad input (exit code 1 from the CLI); computation errors
signal that a precision or size cap was hit (exit code 2).
"""


class StieltjesError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(StieltjesError, ValueError):
    pass


class ComputationError(StieltjesError):
    pass


class NonFundamentalDiscriminant(ValidationError):
    pass


class NotQuadratic(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class DomainError(ValidationError):
    pass


class PoleAt1(DomainError):
    pass


class InconsistentInvariants(ValidationError):
    pass


class TooFewCheckpoints(ValidationError):
    pass


class ResidueMismatch(ValidationError):
    pass


class BoundExceeded(ComputationError):
    pass


class PrecisionTooLow(ComputationError):
    pass


class IndexTooLarge(ComputationError):
    pass
