"""Reduced Pade approximants with Toeplitz-kernel analysis.

The (m, n) Pade class of a power series can contain many coefficient-level
representatives; naive solvers pick an arbitrary one and pay for it with
spurious zero/pole doublets. This package locates the class's minimal
representative through numerical-rank analysis of a Toeplitz matrix family,
with an authored one-sided Jacobi SVD (numba-accelerated, pure-numpy
fallback via the PADE_BACKEND env flag) underneath every rank decision.
"""

from .backend import active_backend, set_backend
from .diagnostics import (
    ComparisonReport,
    DoubletReport,
    RootSet,
    compare,
    detect_doublets,
    poly_roots,
)
from .errors import (
    ConvergenceFailure,
    EmptyInput,
    IndexOutOfFamily,
    IndexOutOfRange,
    InsufficientCoefficients,
    KernelDimensionMismatch,
    PadeError,
    ParseError,
    PoleAtCenter,
    ShapeMismatch,
    ZeroPolynomial,
)
from .numrank import RankReport, SvdResult, null_space, numerical_rank, svd
from .reduced import (
    EssentialIndices,
    ReducedPade,
    classical_pade,
    cleanup_denominator,
    cleanup_numerator,
    essential_indices,
    minimal_denominator,
    numerator_from_denominator,
    order_condition_residual,
    reduced_pade,
)
from .series import (
    Polynomial,
    PowerSeries,
    RationalSpec,
    poly_eval,
    read_coefficients,
    series_mul_poly,
    taylor_of_rational,
    write_coefficients,
)
from .toeplitz import PadeOrder, delete_column, insert_row, toeplitz_matrix

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "active_backend",
    "set_backend",
    "Polynomial",
    "PowerSeries",
    "RationalSpec",
    "PadeOrder",
    "poly_eval",
    "taylor_of_rational",
    "series_mul_poly",
    "read_coefficients",
    "write_coefficients",
    "toeplitz_matrix",
    "delete_column",
    "insert_row",
    "SvdResult",
    "RankReport",
    "svd",
    "numerical_rank",
    "null_space",
    "EssentialIndices",
    "ReducedPade",
    "essential_indices",
    "minimal_denominator",
    "cleanup_denominator",
    "numerator_from_denominator",
    "cleanup_numerator",
    "reduced_pade",
    "classical_pade",
    "order_condition_residual",
    "RootSet",
    "DoubletReport",
    "ComparisonReport",
    "poly_roots",
    "detect_doublets",
    "compare",
    "PadeError",
    "PoleAtCenter",
    "ParseError",
    "EmptyInput",
    "InsufficientCoefficients",
    "IndexOutOfFamily",
    "IndexOutOfRange",
    "ShapeMismatch",
    "ConvergenceFailure",
    "KernelDimensionMismatch",
    "ZeroPolynomial",
]
