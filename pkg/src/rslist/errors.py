"""Exception types raised across the package."""


class RSError(Exception):
    """Base class for all errors raised by rslist."""


class InvalidFieldParameters(RSError, ValueError):
    pass


class PolynomialNotPrimitive(InvalidFieldParameters):
    pass


class InvalidSubgroupOrder(InvalidFieldParameters):
    pass


class DivisionByZero(RSError, ZeroDivisionError):
    pass


class DimensionError(RSError, ValueError):
    pass


class SingularMatrix(RSError, ArithmeticError):
    pass


class NotACodewordBasis(RSError, ValueError):
    pass


class InvalidCodeParameters(RSError, ValueError):
    pass


class ZeroMultiplier(RSError, ValueError):
    pass


class SpectrumStructureViolation(RSError, ArithmeticError):
    pass


class TrailingNonzero(RSError, ValueError):
    pass


class InstanceTooLarge(RSError, ValueError):
    pass


class ParameterTooSmall(RSError, ValueError):
    """Interpolation parameters cannot reach the requested radius."""

    def __init__(self, message: str, suggested_multiplicity: int | None = None):
        super().__init__(message)
        self.suggested_multiplicity = suggested_multiplicity


class RecoveryMismatch(RSError, AssertionError):
    pass


class FormatError(RSError, ValueError):
    pass
