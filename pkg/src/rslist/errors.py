"""Exception types raised across the package."""


class CodingError(Exception):
    """Base class for every error raised by rslist."""


class NonPrimeCharacteristic(CodingError, ValueError):
    pass


class ReducibleModulus(CodingError, ValueError):
    pass


class UnsupportedOrder(CodingError, ValueError):
    pass


class DivisionByZero(CodingError, ZeroDivisionError):
    pass


class FieldMismatch(CodingError, ValueError):
    pass


class ZeroPolynomial(CodingError, ValueError):
    pass


class DimensionMismatch(CodingError, ValueError):
    pass


class SolutionSpaceTooLarge(CodingError):
    """The affine solution space has more than ``cap`` points."""


class LengthMismatch(CodingError, ValueError):
    pass


class InvalidSpec(CodingError, ValueError):
    pass


class ThresholdTooLow(CodingError, ValueError):
    """Agreement threshold is outside the regime where the decoder is guaranteed."""


class InternalContradiction(CodingError, RuntimeError):
    pass


class InvalidFoldParams(CodingError, ValueError):
    pass


class InvalidRate(CodingError, ValueError):
    pass


class InequalityViolated(CodingError, ValueError):
    pass


class BudgetShape(CodingError, ValueError):
    pass


class SearchSpaceTooLarge(CodingError):
    pass
