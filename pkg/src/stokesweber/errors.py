"""Exception hierarchy shared by all modules.

Each class carries the CLI exit code it maps to.
"""


class WeberError(Exception):
    exit_code = 2


class BadInputError(WeberError, ValueError):
    exit_code = 2


class PoleError(BadInputError):
    """Raised when a Kummer denominator parameter b sits on 0, -1, -2, ..."""


class NotGeneratedError(WeberError, LookupError):
    """Requested coefficient index lies beyond the generation ceiling."""

    exit_code = 2


class PrecisionExhaustedError(WeberError, ArithmeticError):
    exit_code = 3


class TruncationError(WeberError, ValueError):
    """Optimal truncation is undefined because x is too small for given a."""

    exit_code = 4
