"""Exception hierarchy shared by every module of the package."""


class P1SplitError(Exception):
    """Base class for all errors raised by p1split."""


class DivisionByZero(P1SplitError, ZeroDivisionError):
    pass


class FieldMismatch(P1SplitError, ValueError):
    pass


class DimensionMismatch(P1SplitError, ValueError):
    pass


class SingularMatrix(P1SplitError, ArithmeticError):
    """The basis matrix is not invertible over the fraction field."""


class UnsupportedField(P1SplitError, ValueError):
    pass


class EnumerationCapExceeded(P1SplitError, ValueError):
    pass


class VerificationError(P1SplitError, AssertionError):
    """A produced certificate failed its own re-verification (a bug trap)."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
