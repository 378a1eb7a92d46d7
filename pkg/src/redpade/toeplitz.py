"""Toeplitz window matrices for a Pade order.

For order (m, n) and offset k in [m-n+1, m+n+1], the family member is the
(m+n-k+1) x (k-m+n) matrix with entry (i, j) = c_{k+i-j}, built from the
series coefficients with c_j = 0 for j < 0. Matrices are plain row-major
complex128 numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    IndexOutOfFamily,
    IndexOutOfRange,
    InsufficientCoefficients,
    ShapeMismatch,
)
from .series import PowerSeries

__all__ = ["PadeOrder", "toeplitz_matrix", "delete_column", "insert_row"]


@dataclass(frozen=True)
class PadeOrder:
    """Numerator degree m and denominator degree n of a Pade request."""

    m: int
    n: int

    def __post_init__(self):
        if self.m != int(self.m) or self.n != int(self.n):
            raise ValueError("order degrees must be integers")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", int(self.n))
        if self.m < 0 or self.n < 0:
            raise ValueError(f"order degrees must be non-negative, got {self}")

    def __iter__(self):
        yield self.m
        yield self.n


def as_order(order) -> PadeOrder:
    """Coerce a PadeOrder or (m, n) pair to PadeOrder."""
    if isinstance(order, PadeOrder):
        return order
    m, n = order
    return PadeOrder(m, n)


def toeplitz_matrix(f: PowerSeries, order, k: int) -> np.ndarray:
    """Family member at offset k for the series f and the given order."""
    m, n = as_order(order)
    if not (m - n + 1 <= k <= m + n + 1):
        raise IndexOutOfFamily(
            f"offset {k} outside [{m - n + 1}, {m + n + 1}] for order ({m}, {n})"
        )
    if len(f) < m + n + 1:
        raise InsufficientCoefficients(m + n + 1, len(f))
    rows = m + n - k + 1
    cols = k - m + n
    idx = k + np.arange(rows)[:, None] - np.arange(cols)[None, :]
    vals = f.coeffs[np.maximum(idx, 0)]
    return np.where(idx >= 0, vals, 0j).astype(np.complex128)


def delete_column(T: np.ndarray, k: int) -> np.ndarray:
    """Copy of T without its k-th column (1-based)."""
    if not 1 <= k <= T.shape[1]:
        raise IndexOutOfRange(f"column {k} outside 1..{T.shape[1]}")
    return np.delete(T, k - 1, axis=1)


def insert_row(T: np.ndarray, f: PowerSeries, k: int, kappa: int) -> np.ndarray:
    """Copy of T with the row (c_k, c_{k-1}, ..., c_{k-kappa}) prepended."""
    if kappa < 0:
        raise ValueError("kappa must be non-negative")
    if T.shape[1] != kappa + 1:
        raise ShapeMismatch(f"matrix has {T.shape[1]} columns, row has {kappa + 1}")
    if k < 0:
        raise ValueError("row index k must be non-negative")
    row = np.array([f.coeff(k - j) for j in range(kappa + 1)], dtype=np.complex128)
    return np.vstack([row[None, :], T])
