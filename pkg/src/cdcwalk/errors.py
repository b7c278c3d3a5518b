"""Exception types raised across the package."""


class CdcWalkError(Exception):
    """Base class for every error raised by cdcwalk."""


class MalformedGraph6(CdcWalkError, ValueError):
    """A graph6 record could not be decoded."""


class UnsupportedSize(CdcWalkError, ValueError):
    """The graph is larger than the operation supports."""


class DimensionError(CdcWalkError, ValueError):
    """Operands have incompatible shapes or orders."""


class RankDeficient(CdcWalkError, ValueError):
    """A coefficient matrix lacks full column rank."""


class NumericFailure(CdcWalkError, ArithmeticError):
    """The eigensolver did not converge within its sweep budget."""

    def __init__(self, message, matrix=None):
        super().__init__(message)
        self.matrix = matrix


class ToleranceFailure(CdcWalkError, ArithmeticError):
    """Floating-point and exact computations disagree."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class ConsistencyError(CdcWalkError, AssertionError):
    """An internal invariant that should always hold was violated."""
