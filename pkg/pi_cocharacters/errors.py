"""
Exceptions raised by the cocharacter engine. Every error the CLI can map to an exit
status derives from CocharError.
"""

INT64_MAX = 2**63 - 1


class CocharError(Exception):
    """Base class of all engine errors."""


class InvalidPartitionError(CocharError, ValueError):
    """Raised when parts are not a weakly decreasing sequence of nonnegative integers."""


class TruncationMismatchError(CocharError, ValueError):
    """Raised when two series with different truncations are combined."""


class TruncationError(CocharError, ValueError):
    """Raised when a truncation degree is out of range for the requested operation."""


class NegativeMultiplicityError(CocharError):
    """
    Raised when a character slice carries a negative multiplicity. Hilbert series of
    algebras have nonnegative Schur coefficients, so this is an internal inconsistency.
    """


class UnknownFormulaError(CocharError, KeyError):
    """Raised for a closed-form identifier that names no known statement."""


class UnsupportedAlgebraError(CocharError, ValueError):
    """Raised when an operation is not defined for the given algebra."""


class MissingSliceError(CocharError, KeyError):
    """Raised when a proper cocharacter slice needed by the interlacing sum is absent."""


class UsageError(CocharError, ValueError):
    """Raised for invalid command line flags or flag combinations."""


class ArithmeticOverflowError(CocharError, OverflowError):
    """Raised when a count leaves the signed 64-bit range."""


def checked(value: int, what: str = "value") -> int:
    """
    Return value unchanged if it fits into a signed 64-bit integer.

    Parameters:
    -----------
    value : int
        The integer to check.
    what : str
        Name of the quantity, used in the error message.

    Returns:
    --------
    int
        The unchanged value.

    Raises:
    -------
    ArithmeticOverflowError
        If |value| exceeds 2**63 - 1.
    """
    if -INT64_MAX - 1 <= value <= INT64_MAX:
        return value
    raise ArithmeticOverflowError(f"{what} overflows 64-bit range. Instead got: {value}")
