"""Exception hierarchy shared by all polematch modules."""


class PolematchError(Exception):
    """Base class for all errors raised by this package."""


class NumericInputError(PolematchError, ValueError):
    """An input array contains NaN or Inf entries."""


class ShapeError(PolematchError, ValueError):
    """Array dimensions are inconsistent with the operation's contract."""


class SingularMatrixError(PolematchError, ArithmeticError):
    """A matrix is singular (or singular within tolerance) where a regular one is required."""


class RankDeficientError(PolematchError, ValueError):
    """Least-squares matrix is rank deficient beyond tolerance.

    Attributes
    ----------
    rank : int
        Estimated numerical rank of the offending matrix.
    """

    def __init__(self, message, rank):
        super().__init__(message)
        self.rank = rank


class DomainError(PolematchError, ValueError):
    """A frequency or parameter value lies outside the model's domain."""


class DegenerateError(PolematchError, ValueError):
    """Degenerate data (all-zero snapshots, repeated poles) that the method cannot handle."""


class NonConvergenceError(PolematchError, RuntimeError):
    """Greedy loop exhausted its iteration budget before reaching tolerance.

    Attributes
    ----------
    last_error : float
        Error estimate at the final iteration.
    """

    def __init__(self, message, last_error):
        super().__init__(message)
        self.last_error = last_error


class PencilFormatError(PolematchError, ValueError):
    """A pencil file could not be parsed; carries position info when available."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SurrogateLoadError(PolematchError, ValueError):
    """A serialized surrogate file is malformed or has an unsupported version."""


class NearPoleWarning(UserWarning):
    """Evaluation point lies numerically on top of an interpolated pole."""
