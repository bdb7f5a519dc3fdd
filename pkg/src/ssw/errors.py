"""Exception types raised by the library."""


class SSWError(ValueError):
    """Base class for all library errors."""


class NonPrimeP(SSWError):
    pass


class ReducibleModulus(SSWError):
    pass


class DegreeMismatch(SSWError):
    pass


class FieldMismatch(SSWError):
    pass


class DivisionByZero(SSWError, ZeroDivisionError):
    pass


class InvalidQ(SSWError):
    pass


class InvalidDims(SSWError):
    pass


class DimensionMismatch(SSWError):
    pass


class EnumerationLimitExceeded(SSWError):
    pass


class SpecInvariantViolation(SSWError):
    pass


class RankDeficient(SSWError):
    pass


class NonDivisibleExponent(SSWError):
    pass


class FormatError(SSWError):
    """Malformed matrix or basis file."""
