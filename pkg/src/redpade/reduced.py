"""Reduced Pade approximants.

Given m+n+1 Taylor coefficients, the classical linear system for the order
(m, n) denominator can have a numerical kernel of dimension > 1; an SVD
solver then returns an arbitrary kernel vector whose extra factors show up
as paired spurious zero/pole doublets. The pipeline here instead locates the
essential indices of the Toeplitz family, extracts the unique minimal-degree
denominator from a one-dimensional kernel, and zeroes coefficients that rank
tests prove are exact zeros, so the output is the minimal representative of
the Pade equivalence class.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientCoefficients, KernelDimensionMismatch, PadeError
from .numrank import RankReport, numerical_rank, svd
from .series import Polynomial, PowerSeries, series_mul_poly
from .toeplitz import PadeOrder, as_order, delete_column, insert_row, toeplitz_matrix

__all__ = [
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
]

_ANCHOR_REL = 1e-8


@dataclass(frozen=True)
class EssentialIndices:
    """Numerical rank kappa of the index matrix and the derived pair mu1 < mu2."""

    order: PadeOrder
    kappa: int
    mu1: int
    mu2: int
    rank_report: RankReport

    def __post_init__(self):
        m, n = self.order
        if not 0 <= self.kappa <= n:
            raise ValueError(f"kappa {self.kappa} outside 0..{n}")
        if self.mu1 != m - n + self.kappa or self.mu2 != m + n - self.kappa + 1:
            raise ValueError("essential indices inconsistent with kappa")
        if not (self.mu1 + self.mu2 == 2 * m + 1 and self.mu1 <= m < self.mu2):
            raise ValueError("essential index invariants violated")


@dataclass(frozen=True)
class ReducedPade:
    """Minimal representative of the (m, n) Pade class of a series."""

    order: PadeOrder
    center: complex
    numerator: Polynomial
    denominator: Polynomial
    indices: EssentialIndices
    deficiency: int
    baker_exists: bool
    zeroed_q: frozenset[int]
    zeroed_p: frozenset[int]
    kernel_rank_report: RankReport
    cleanup_applied: bool
    degenerate_window: bool = False
    warnings: tuple[str, ...] = ()


def _require_window(f: PowerSeries, m: int, n: int) -> None:
    if len(f) < m + n + 1:
        raise InsufficientCoefficients(m + n + 1, len(f))


def essential_indices(f: PowerSeries, order, tol: float | None = None) -> EssentialIndices:
    """Rank the index matrix (offset m member, shape (n+1) x n) of the family.

    n = 0 is the degenerate zero-column case: kappa = 0 without any matrix
    work. An all-zero coefficient window likewise lands on kappa = 0.
    """
    order = as_order(order)
    m, n = order
    _require_window(f, m, n)
    if n == 0:
        empty = np.zeros((1, 0), dtype=np.complex128)
        report = numerical_rank(svd(empty), tol)
    else:
        report = numerical_rank(svd(toeplitz_matrix(f, order, m)), tol)
    kappa = report.rank
    return EssentialIndices(
        order=order,
        kappa=kappa,
        mu1=m - n + kappa,
        mu2=m + n - kappa + 1,
        rank_report=report,
    )


def _kernel_matrix(f: PowerSeries, idx: EssentialIndices) -> np.ndarray:
    """The family member whose null space carries the minimal denominator."""
    return toeplitz_matrix(f, idx.order, idx.mu1 + 1)


def _normalize_vector(q: np.ndarray) -> np.ndarray:
    """Unit 2-norm, lowest significant coefficient rotated to the positive reals."""
    norm = np.linalg.norm(q)
    if norm == 0.0:
        raise PadeError("cannot normalize a zero vector")
    q = q / norm
    significant = np.nonzero(np.abs(q) > _ANCHOR_REL * np.abs(q).max())[0]
    phase = q[significant[0]]
    return q * (phase.conjugate() / abs(phase))


def minimal_denominator(
    f: PowerSeries, order, idx: EssentialIndices, tol: float | None = None
) -> tuple[Polynomial, RankReport]:
    """Minimal-degree denominator from the one-dimensional kernel.

    The kernel matrix (offset mu1 + 1, shape (2n - kappa) x (kappa + 1)) has
    exactly one null direction; its coefficients are the denominator, unit
    norm with the lowest significant coefficient real positive. A numerical
    null space of any other dimension raises KernelDimensionMismatch.
    """
    order = as_order(order)
    if order != idx.order:
        raise ValueError(f"order {order} does not match the indices' order {idx.order}")
    K = _kernel_matrix(f, idx)
    res = svd(K)
    report = numerical_rank(res, tol)
    dim = res.cols - report.rank
    if dim != 1:
        raise KernelDimensionMismatch(dim, idx.kappa, report.rank, report.gap)
    q = _normalize_vector(np.array(res.V[:, -1]))
    return Polynomial(q, f.center), report


def _column_rank(K: np.ndarray, k: int, tol: float | None) -> int:
    """Rank of the kernel matrix with 1-based column k removed."""
    return numerical_rank(svd(delete_column(K, k)), tol).rank


def cleanup_denominator(
    f: PowerSeries,
    idx: EssentialIndices,
    q: Polynomial,
    tol: float | None = None,
    warnings_out: list[str] | None = None,
) -> tuple[Polynomial, frozenset[int]]:
    """Zero every denominator coefficient whose vanishing a rank test certifies.

    Coefficient k is an exact zero of the underlying problem iff deleting
    column k+1 of the kernel matrix drops its rank to kappa - 1; those
    entries are replaced by exact zeros and the vector is renormalized. Rank
    outcomes other than kappa or kappa - 1 are recorded as warnings and
    leave the coefficient untouched.
    """
    kappa = idx.kappa
    coeffs = np.array(q.coeffs, dtype=np.complex128)
    if len(coeffs) != kappa + 1:
        raise ValueError(f"denominator has {len(coeffs)} coefficients, expected {kappa + 1}")
    K = _kernel_matrix(f, idx)
    zeroed = set()
    for k in range(kappa + 1):
        r = _column_rank(K, k + 1, tol)
        if r == kappa - 1:
            coeffs[k] = 0.0
            zeroed.add(k)
        elif r != kappa and warnings_out is not None:
            warnings_out.append(
                f"denominator test {k}: rank {r} is neither {kappa} nor {kappa - 1}; "
                "coefficient kept"
            )
    if not np.any(coeffs):
        raise PadeError(
            "cleanup zeroed every denominator coefficient; tolerance is inconsistent"
        )
    return Polynomial(_normalize_vector(coeffs), q.center), frozenset(zeroed)


def numerator_from_denominator(f: PowerSeries, order, q: Polynomial) -> Polynomial:
    """Numerator coefficients p_k = sum_j c_{k-j} q_j for k = 0..m."""
    order = as_order(order)
    m, n = order
    _require_window(f, m, n)
    if q.degree > n:
        raise ValueError(f"denominator formal degree {q.degree} exceeds n = {n}")
    prod = series_mul_poly(f, q, m + 1)
    return Polynomial(prod.coeffs, f.center)


def cleanup_numerator(
    f: PowerSeries,
    idx: EssentialIndices,
    p: Polynomial,
    tol: float | None = None,
    warnings_out: list[str] | None = None,
) -> tuple[Polynomial, frozenset[int]]:
    """Zero numerator coefficients certified by row-augmentation rank tests.

    Coefficient k vanishes iff prepending the row (c_k, ..., c_{k-kappa}) to
    the kernel matrix leaves the rank at kappa (the row is dependent). Rank
    outcomes other than kappa or kappa + 1 are recorded as warnings.
    """
    kappa = idx.kappa
    m, _ = idx.order
    coeffs = np.array(p.coeffs, dtype=np.complex128)
    if len(coeffs) != m + 1:
        raise ValueError(f"numerator has {len(coeffs)} coefficients, expected {m + 1}")
    K = _kernel_matrix(f, idx)
    zeroed = set()
    for k in range(m + 1):
        r = numerical_rank(svd(insert_row(K, f, k, kappa)), tol).rank
        if r == kappa:
            coeffs[k] = 0.0
            zeroed.add(k)
        elif r != kappa + 1 and warnings_out is not None:
            warnings_out.append(
                f"numerator test {k}: rank {r} is neither {kappa} nor {kappa + 1}; "
                "coefficient kept"
            )
    return Polynomial(coeffs, p.center), frozenset(zeroed)


def reduced_pade(
    f: PowerSeries, order, cleanup: bool = True, tol: float | None = None
) -> ReducedPade:
    """Compute the reduced Pade approximant of f at the given order.

    The denominator is cleaned before the numerator is synthesized, so exact
    zeros never leak into the Cauchy products. With cleanup disabled the raw
    kernel vector is used as-is (stray roundoff-level coefficients survive);
    baker_exists is still decided by the rank test on the constant
    coefficient, never by its magnitude.
    """
    order = as_order(order)
    m, n = order
    _require_window(f, m, n)
    window = f.coeffs[max(0, m - n + 1) : m + n + 1]
    degenerate_window = not np.any(window)
    warnings: list[str] = []

    idx = essential_indices(f, order, tol)
    if not idx.rank_report.well_determined:
        warnings.append(
            f"index-matrix rank gap {idx.rank_report.gap:.3e} below threshold; "
            "kappa may be tolerance-sensitive"
        )
    q_raw, kernel_report = minimal_denominator(f, order, idx, tol)
    if not kernel_report.well_determined:
        warnings.append(
            f"kernel-matrix rank gap {kernel_report.gap:.3e} below threshold; "
            "denominator may be tolerance-sensitive"
        )
    if degenerate_window:
        warnings.append(
            "coefficient window is identically zero; approximant degenerates to "
            "the truncation over 1"
        )

    if cleanup:
        q, zeroed_q = cleanup_denominator(f, idx, q_raw, tol, warnings_out=warnings)
        baker_exists = 0 not in zeroed_q
    else:
        q, zeroed_q = q_raw, frozenset()
        K = _kernel_matrix(f, idx)
        baker_exists = _column_rank(K, 1, tol) != idx.kappa - 1

    p = numerator_from_denominator(f, order, q)
    if cleanup:
        p, zeroed_p = cleanup_numerator(f, idx, p, tol, warnings_out=warnings)
    else:
        zeroed_p = frozenset()

    deficiency = 0
    while deficiency in zeroed_q:
        deficiency += 1

    return ReducedPade(
        order=order,
        center=f.center,
        numerator=p,
        denominator=q,
        indices=idx,
        deficiency=deficiency,
        baker_exists=baker_exists,
        zeroed_q=zeroed_q,
        zeroed_p=zeroed_p,
        kernel_rank_report=kernel_report,
        cleanup_applied=cleanup,
        degenerate_window=degenerate_window,
        warnings=tuple(warnings),
    )


def classical_pade(f: PowerSeries, order) -> tuple[Polynomial, Polynomial]:
    """Baseline solver: denominator from the last right singular vector.

    This is the naive construction, an arbitrary unit vector of the numerical
    null space of the order (m, n) linear system (offset m+1 family member,
    shape n x (n+1)). When that null space has dimension > 1 the extra factor
    shows up as spurious zero/pole doublets; the reduced pipeline exists to
    avoid exactly this.
    """
    order = as_order(order)
    m, n = order
    _require_window(f, m, n)
    E = toeplitz_matrix(f, order, m + 1)
    res = svd(E)
    q = _normalize_vector(np.array(res.V[:, -1]))
    qpoly = Polynomial(q, f.center)
    prod = series_mul_poly(f, qpoly, m + 1)
    return Polynomial(prod.coeffs, f.center), qpoly


def order_condition_residual(f: PowerSeries, p: Polynomial, q: Polynomial, order) -> np.ndarray:
    """Magnitudes of the coefficients of f * q - p over the available window.

    For a valid order (m, n) approximant the first m + n + 1 entries are all
    roundoff-level; entries beyond that report how the error continues.
    """
    order = as_order(order)
    m, n = order
    _require_window(f, m, n)
    if p.center != f.center or q.center != f.center:
        raise ValueError("numerator/denominator centers differ from the series center")
    prod = series_mul_poly(f, q, len(f))
    residual = np.array(prod.coeffs)
    upto = min(len(p.coeffs), len(residual))
    residual[:upto] -= p.coeffs[:upto]
    return np.abs(residual)
