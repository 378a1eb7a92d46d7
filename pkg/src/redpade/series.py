"""Power series and polynomial core.

Polynomials and power series store complex128 coefficients lowest order
first, together with the expansion center a, so a coefficient vector
(c_0, ..., c_d) means sum_k c_k (z - a)^k. Values are immutable once
constructed (the coefficient arrays are frozen), so they are safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .backend import kernels
from .errors import (
    EmptyInput,
    InsufficientCoefficients,
    ParseError,
    PoleAtCenter,
    ZeroPolynomial,
)

__all__ = [
    "Polynomial",
    "PowerSeries",
    "RationalSpec",
    "poly_eval",
    "taylor_of_rational",
    "series_mul_poly",
    "read_coefficients",
    "write_coefficients",
]


def _freeze_coeffs(raw, what):
    arr = np.atleast_1d(np.asarray(raw, dtype=np.complex128)).copy()
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"{what} needs a non-empty 1-d coefficient sequence")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{what} coefficients must be finite")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Polynomial:
    """Finite coefficient vector (lowest order first) about a center."""

    coeffs: np.ndarray
    center: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _freeze_coeffs(self.coeffs, "Polynomial"))
        object.__setattr__(self, "center", complex(self.center))

    @property
    def degree(self) -> int:
        """Formal degree: index of the last stored coefficient."""
        return len(self.coeffs) - 1

    @property
    def effective_degree(self):
        """Largest k with coeffs[k] != 0, or -inf for the zero polynomial."""
        nz = np.nonzero(self.coeffs)[0]
        if len(nz) == 0:
            return float("-inf")
        return int(nz[-1])

    @property
    def is_zero(self) -> bool:
        return not np.any(self.coeffs)


@dataclass(frozen=True)
class PowerSeries:
    """Finitely many leading Taylor coefficients of a function about a center.

    Indexing below zero yields exactly 0; indexing past the stored window
    raises InsufficientCoefficients.
    """

    coeffs: np.ndarray
    center: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _freeze_coeffs(self.coeffs, "PowerSeries"))
        object.__setattr__(self, "center", complex(self.center))

    def __len__(self) -> int:
        return len(self.coeffs)

    def coeff(self, k: int) -> complex:
        if k < 0:
            return 0j
        if k >= len(self.coeffs):
            raise InsufficientCoefficients(k + 1, len(self.coeffs))
        return complex(self.coeffs[k])


@dataclass(frozen=True)
class RationalSpec:
    """A rational function given as numerator / denominator polynomials."""

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        if self.denominator.is_zero:
            raise ZeroPolynomial("RationalSpec denominator must not be the zero polynomial")


def poly_eval(p: Polynomial, z):
    """Evaluate p at z (scalar or array) by Horner recursion in (z - center)."""
    w = np.asarray(z, dtype=np.complex128) - p.center
    acc = np.zeros_like(w)
    for c in p.coeffs[::-1]:
        acc = acc * w + c
    if np.isscalar(z) or np.ndim(z) == 0:
        return complex(acc)
    return acc


def _recenter(p: Polynomial, center: complex) -> np.ndarray:
    t = complex(center) - p.center
    if t == 0:
        return np.array(p.coeffs, dtype=np.complex128)
    return kernels().shift_expansion(np.ascontiguousarray(p.coeffs), t)


def taylor_of_rational(
    spec: RationalSpec,
    center: complex = 0j,
    count: int = 1,
    guard_tol: float = 1e-12,
) -> PowerSeries:
    """First `count` Taylor coefficients of the rational function about `center`.

    Both polynomials are re-expanded about `center` by repeated synthetic
    division, then the series is produced by power-series long division.
    Raises PoleAtCenter when |den(center)| <= guard_tol * max |den coeffs|
    after re-expansion.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    num_c = _recenter(spec.numerator, center)
    den_c = _recenter(spec.denominator, center)
    scale = np.max(np.abs(den_c))
    if abs(den_c[0]) <= guard_tol * scale:
        raise PoleAtCenter(
            f"denominator magnitude {abs(den_c[0]):.3e} at center {center} "
            f"is below {guard_tol:.1e} * {scale:.3e}"
        )
    c = kernels().series_divide(num_c, den_c, count)
    return PowerSeries(c, center)


def series_mul_poly(f: PowerSeries, q: Polynomial, upto: int) -> PowerSeries:
    """First `upto` coefficients of the product f * q (single Cauchy window)."""
    if upto < 1:
        raise ValueError("upto must be at least 1")
    if f.center != q.center:
        raise ValueError("series and polynomial centers differ")
    if len(f) < upto:
        raise InsufficientCoefficients(upto, len(f))
    out = kernels().cauchy_window(
        np.ascontiguousarray(f.coeffs), np.ascontiguousarray(q.coeffs), upto
    )
    return PowerSeries(out, f.center)


def _parse_float(token: str, lineno: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"cannot parse {token!r} as a number", line=lineno) from None


def read_coefficients(path) -> PowerSeries:
    """Read a coefficient file.

    Format: optional header line `# center <re> [<im>]`, then one coefficient
    per line as `<re>` or `<re> <im>`, lowest order first. Lines starting with
    `#` are comments; trailing `#` comments are allowed on data lines.
    """
    text = Path(path).read_text()
    center = 0j
    center_seen = False
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            tokens = line[1:].split()
            if tokens and tokens[0].lower() == "center":
                if values:
                    raise ParseError("center header after coefficient lines", line=lineno)
                if center_seen:
                    raise ParseError("duplicate center header", line=lineno)
                if len(tokens) not in (2, 3):
                    raise ParseError("center header needs `<re> [<im>]`", line=lineno)
                re = _parse_float(tokens[1], lineno)
                im = _parse_float(tokens[2], lineno) if len(tokens) == 3 else 0.0
                center = complex(re, im)
                center_seen = True
            continue
        tokens = line.split()
        for cut, tok in enumerate(tokens):
            if tok.startswith("#"):
                tokens = tokens[:cut]
                break
        if len(tokens) == 1:
            values.append(complex(_parse_float(tokens[0], lineno), 0.0))
        elif len(tokens) == 2:
            values.append(
                complex(_parse_float(tokens[0], lineno), _parse_float(tokens[1], lineno))
            )
        else:
            raise ParseError(
                f"expected `<re>` or `<re> <im>`, got {len(tokens)} fields", line=lineno
            )
    if not values:
        raise EmptyInput(f"no coefficient lines in {path}")
    return PowerSeries(values, center)


def write_coefficients(series: PowerSeries, path) -> None:
    """Write a coefficient file that read_coefficients reads back unchanged."""
    lines = []
    if series.center != 0:
        lines.append(f"# center {series.center.real!r} {series.center.imag!r}")
    for c in series.coeffs:
        c = complex(c)
        if c.imag == 0.0:
            lines.append(f"{c.real!r}")
        else:
            lines.append(f"{c.real!r} {c.imag!r}")
    Path(path).write_text("\n".join(lines) + "\n")
