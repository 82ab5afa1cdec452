"""Exceptions raised by the digit-closure algebra."""


class DcSemigroupError(Exception):
    """Base class for all errors of this package."""


class DomainError(DcSemigroupError, ValueError):
    """An argument lies outside the domain of an operation."""


class BaseMismatchError(DomainError):
    """Two values built over different bases were combined."""


class ExponentOverflowError(DcSemigroupError, OverflowError):
    """An exponent left the machine-word range."""


class ResourceLimitError(DcSemigroupError, RuntimeError):
    """A computation would exceed one of the configured resource guards."""
