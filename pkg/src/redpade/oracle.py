"""Exact-rational reference implementation used by the test suite.

Everything here runs in exact complex-rational arithmetic (pairs of
`fractions.Fraction`), so ranks, kernels, and zero tests are ground truth
rather than tolerance decisions. It is deliberately slow and small-scale;
the floating pipeline in `reduced` is the production path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .toeplitz import as_order

__all__ = [
    "QC",
    "qc",
    "OracleResult",
    "exact_taylor",
    "exact_rank",
    "exact_kernel_basis_of",
    "exact_toeplitz",
    "exact_kernel_basis",
    "exact_reduced_pade",
    "exact_poly_divmod",
    "to_complex_array",
]


@dataclass(frozen=True)
class QC:
    """Exact complex rational: re + im*i with Fraction parts."""

    re: Fraction
    im: Fraction

    def __add__(self, other):
        return QC(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return QC(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return QC(-self.re, -self.im)

    def __mul__(self, other):
        return QC(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other):
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return QC(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))


QC_ZERO = QC(Fraction(0), Fraction(0))
QC_ONE = QC(Fraction(1), Fraction(0))


def qc(x) -> QC:
    """Coerce ints, Fractions, floats, and complex values to exact QC."""
    if isinstance(x, QC):
        return x
    if isinstance(x, complex):
        return QC(Fraction(x.real), Fraction(x.imag))
    return QC(Fraction(x), Fraction(0))


def to_complex_array(values) -> np.ndarray:
    if values and isinstance(values[0], (list, tuple)):
        return np.array(
            [[complex(v) for v in row] for row in values], dtype=np.complex128
        )
    return np.array([complex(v) for v in values], dtype=np.complex128)


def exact_taylor(num, den, count: int):
    """First `count` series coefficients of num/den by exact long division."""
    num = [qc(x) for x in num]
    den = [qc(x) for x in den]
    if not den or den[0].is_zero:
        raise ZeroDivisionError("denominator constant term is exactly zero")
    out = []
    for k in range(count):
        acc = num[k] if k < len(num) else QC_ZERO
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc / den[0])
    return out


def _rref(rows):
    """Reduced row echelon form in place; returns the pivot column list."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if not rows[i][col].is_zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][col]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def exact_rank(matrix) -> int:
    rows = [list(row) for row in matrix]
    return len(_rref(rows))


def exact_kernel_basis_of(matrix, ncols: int):
    """Exact null-space basis vectors (length ncols) of the given rows."""
    rows = [list(row) for row in matrix]
    pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [QC_ZERO] * ncols
        v[fc] = QC_ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def exact_toeplitz(c, order, k: int):
    """Exact family member at offset k (entry (i, j) = c_{k+i-j}, c_{<0} = 0)."""
    m, n = as_order(order)
    c = [qc(x) for x in c]
    rows = m + n - k + 1
    cols = k - m + n
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            idx = k + i - j
            row.append(c[idx] if 0 <= idx < len(c) else QC_ZERO)
        out.append(row)
    return out


def exact_kernel_basis(c, order, k: int):
    """Exact null-space basis of the offset-k family member."""
    m, n = as_order(order)
    return exact_kernel_basis_of(exact_toeplitz(c, order, k), k - m + n)


@dataclass(frozen=True)
class OracleResult:
    kappa: int
    mu1: int
    mu2: int
    delta: int
    q: tuple
    p: tuple
    zeroed_q: frozenset
    zeroed_p: frozenset


def exact_reduced_pade(c, order) -> OracleResult:
    """Ground-truth reduced approximant from exact series coefficients.

    Returns the minimal denominator (normalized so its lowest nonzero
    coefficient is exactly 1), the matching numerator window, the exact
    essential indices, and the exact zero patterns of both coefficient
    vectors.
    """
    order = as_order(order)
    m, n = order
    c = [qc(x) for x in c]
    if len(c) < m + n + 1:
        raise ValueError(f"need {m + n + 1} coefficients, got {len(c)}")
    if n == 0:
        kappa = 0
    else:
        kappa = exact_rank(exact_toeplitz(c, order, m))
    mu1 = m - n + kappa
    mu2 = m + n - kappa + 1
    basis = exact_kernel_basis(c, order, mu1 + 1)
    if len(basis) != 1:
        raise ValueError(f"exact kernel dimension {len(basis)} != 1")
    q = basis[0]
    lead = next(i for i, x in enumerate(q) if not x.is_zero)
    q = [x / q[lead] for x in q]
    p = []
    for k in range(m + 1):
        acc = QC_ZERO
        for j in range(min(k, kappa) + 1):
            if k - j < len(c):
                acc = acc + q[j] * c[k - j]
        p.append(acc)
    zeroed_q = frozenset(i for i, x in enumerate(q) if x.is_zero)
    zeroed_p = frozenset(i for i, x in enumerate(p) if x.is_zero)
    delta = 0
    while delta in zeroed_q:
        delta += 1
    return OracleResult(
        kappa=kappa,
        mu1=mu1,
        mu2=mu2,
        delta=delta,
        q=tuple(q),
        p=tuple(p),
        zeroed_q=zeroed_q,
        zeroed_p=zeroed_p,
    )


def _trim(poly):
    out = list(poly)
    while out and out[-1].is_zero:
        out.pop()
    return out


def exact_poly_divmod(num, den):
    """Exact polynomial division: num = quot * den + rem."""
    num = _trim([qc(x) for x in num])
    den = _trim([qc(x) for x in den])
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    quot = [QC_ZERO] * max(0, len(num) - len(den) + 1)
    rem = list(num)
    while len(rem) >= len(den):
        factor = rem[-1] / den[-1]
        pos = len(rem) - len(den)
        quot[pos] = factor
        for i, dcoef in enumerate(den):
            rem[pos + i] = rem[pos + i] - factor * dcoef
        rem = _trim(rem)  # the leading term cancels exactly, so this shrinks
    return quot, rem
