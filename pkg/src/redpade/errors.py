"""Exception types raised by the redpade library."""


class PadeError(Exception):
    """Base class for all library errors."""


class PoleAtCenter(PadeError):
    """The expansion center is (numerically) a denominator root."""


class ParseError(PadeError):
    """A coefficient file line could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EmptyInput(PadeError):
    """A coefficient file contained no coefficient lines."""


class InsufficientCoefficients(PadeError):
    """The power series does not supply enough coefficients."""

    def __init__(self, needed, got):
        super().__init__(f"need {needed} coefficients, got {got}")
        self.needed = needed
        self.got = got


class IndexOutOfFamily(PadeError):
    """The requested offset lies outside the Toeplitz family for this order."""


class IndexOutOfRange(PadeError, IndexError):
    """A 1-based column index lies outside the matrix."""


class ShapeMismatch(PadeError):
    """A matrix has the wrong number of columns for the requested row."""


class ConvergenceFailure(PadeError):
    """The SVD iteration did not converge within its sweep cap."""


class KernelDimensionMismatch(PadeError):
    """The numerical null space used for the denominator is not one-dimensional."""

    def __init__(self, dimension, expected_rank, rank_found, gap):
        super().__init__(
            f"kernel dimension {dimension} (expected 1): matrix rank {rank_found} "
            f"!= expected {expected_rank}, gap {gap:.3e}; adjust the tolerance"
        )
        self.dimension = dimension
        self.expected_rank = expected_rank
        self.rank_found = rank_found
        self.gap = gap


class ZeroPolynomial(PadeError):
    """Root extraction was asked for the zero polynomial."""
