"""Exception types shared across the package."""

__all__ = [
    "NearlyPentaError",
    "TooSmall",
    "InvalidSize",
    "NotNearlyPentadiagonal",
    "InputFormatError",
    "ZeroPivot",
    "SingularMatrix",
    "ZeroDenominator",
    "PoleAtZero",
]


class NearlyPentaError(Exception):
    """Base class for every error raised by this package."""


class TooSmall(NearlyPentaError, ValueError):
    """System size below the minimum of 5."""

    def __init__(self, n):
        super().__init__(f"system size must be at least 5, got {n}")
        self.n = n


# Same condition seen from the solver side; the matrix type already
# enforces it, so solvers never get a chance to raise this themselves.
InvalidSize = TooSmall


class NotNearlyPentadiagonal(NearlyPentaError, ValueError):
    """Dense input has a nonzero entry outside the five bands and corners."""

    def __init__(self, row, col):
        super().__init__(
            f"nonzero entry at ({row}, {col}) lies outside the pentadiagonal "
            f"bands and the (1, 4) / (n, n-3) corners"
        )
        self.row = row
        self.col = col


class InputFormatError(NearlyPentaError, ValueError):
    """Malformed input: JSON shape, band lengths, or scalar values."""


class ZeroPivot(NearlyPentaError, ArithmeticError):
    """The elimination produced a zero pivot; the direct solve cannot continue.

    `index` is the 1-based pivot position. The symbolic solve can rescue
    any such system that is itself nonsingular.
    """

    def __init__(self, index):
        super().__init__(
            f"zero pivot at position {index}: the direct elimination fails "
            f"for this matrix (the symbolic mode can rescue it)"
        )
        self.index = index


class SingularMatrix(NearlyPentaError, ArithmeticError):
    """The matrix has no unique solution for the given right-hand side."""


class ZeroDenominator(NearlyPentaError, ZeroDivisionError):
    """A rational function was built with a zero denominator."""


class PoleAtZero(NearlyPentaError, ZeroDivisionError):
    """A rational function has no value at 0 (denominator vanishes there)."""
