"""Root extraction and spurious-doublet diagnostics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroPolynomial
from .reduced import ReducedPade, classical_pade, reduced_pade
from .series import Polynomial, PowerSeries
from .toeplitz import PadeOrder, as_order

__all__ = [
    "RootSet",
    "DoubletReport",
    "ComparisonReport",
    "poly_roots",
    "detect_doublets",
    "compare",
]


@dataclass(frozen=True)
class RootSet:
    """Roots of a polynomial counting multiplicity, plus the trimming record."""

    roots: np.ndarray
    effective_degree: int
    trimmed_leading: int
    trim_tol: float


@dataclass(frozen=True)
class DoubletReport:
    """Greedy pairing of zeros with nearby poles.

    Each pair is (zero, pole, distance) with distance = |zero - pole| and
    distance <= pairing_tol * max(1, |zero|); a populated `pairs` list on a
    computed approximant is the signature of spurious zero/pole doublets.
    """

    pairs: tuple[tuple[complex, complex, float], ...]
    unpaired_zeros: np.ndarray
    unpaired_poles: np.ndarray
    pairing_tol: float

    @property
    def count(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class ComparisonReport:
    """Side-by-side of the baseline solver and the reduced pipeline."""

    order: PadeOrder
    reduced: ReducedPade
    classical_numerator: Polynomial
    classical_denominator: Polynomial
    reduced_zeros: np.ndarray
    reduced_poles: np.ndarray
    classical_zeros: np.ndarray
    classical_poles: np.ndarray
    reduced_doublets: DoubletReport
    classical_doublets: DoubletReport
    agree: bool


def _horner_pair(coeffs: np.ndarray, w: complex) -> tuple[complex, complex]:
    """Value and derivative of sum c_k w^k at w."""
    val = 0j
    der = 0j
    for c in coeffs[::-1]:
        der = der * w + val
        val = val * w + c
    return val, der


def poly_roots(p: Polynomial, trim_tol: float = 0.0) -> RootSet:
    """All roots of p counting multiplicity, via companion-matrix eigenvalues.

    Leading coefficients with magnitude <= trim_tol * max|coeff| are dropped
    first (trim_tol = 0 drops only exact zeros, so roundoff-level stray
    leading coefficients faithfully produce their huge spurious roots). Each
    eigenvalue is polished by a single Newton step.
    """
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no defined root set")
    if not 0.0 <= trim_tol < 1.0:
        raise ValueError("trim_tol must lie in [0, 1)")
    coeffs = p.coeffs
    threshold = trim_tol * np.max(np.abs(coeffs))
    keep_idx = np.nonzero(np.abs(coeffs) > threshold)[0]
    last = int(keep_idx[-1])
    trimmed_leading = len(coeffs) - 1 - last
    kept = coeffs[: last + 1]
    d = last
    if d == 0:
        return RootSet(
            roots=np.zeros(0, dtype=np.complex128),
            effective_degree=0,
            trimmed_leading=trimmed_leading,
            trim_tol=trim_tol,
        )
    monic = kept / kept[-1]
    companion = np.zeros((d, d), dtype=np.complex128)
    if d > 1:
        companion[1:, :-1] = np.eye(d - 1)
    companion[:, -1] = -monic[:d]
    roots = np.linalg.eigvals(companion)
    for i, w in enumerate(roots):
        val, der = _horner_pair(kept, w)
        if der != 0:
            roots[i] = w - val / der
    roots = roots + p.center
    order = np.lexsort((roots.imag, roots.real))
    return RootSet(
        roots=roots[order],
        effective_degree=d,
        trimmed_leading=trimmed_leading,
        trim_tol=trim_tol,
    )


def detect_doublets(zeros, poles, pairing_tol: float = 1e-3) -> DoubletReport:
    """Pair the globally closest zero/pole while their relative distance fits.

    Relative distance is |zero - pole| / max(1, |zero|); pairing is greedy on
    that measure, each zero and pole used at most once.
    """
    if pairing_tol <= 0:
        raise ValueError("pairing_tol must be positive")
    zs = list(np.atleast_1d(np.asarray(zeros, dtype=np.complex128)))
    ps = list(np.atleast_1d(np.asarray(poles, dtype=np.complex128)))
    pairs = []
    while zs and ps:
        best = None
        for i, z in enumerate(zs):
            denom = max(1.0, abs(z))
            for j, pole in enumerate(ps):
                rel = abs(z - pole) / denom
                if best is None or rel < best[0]:
                    best = (rel, i, j)
        rel, i, j = best
        if rel > pairing_tol:
            break
        z = zs.pop(i)
        pole = ps.pop(j)
        pairs.append((complex(z), complex(pole), float(abs(z - pole))))
    return DoubletReport(
        pairs=tuple(pairs),
        unpaired_zeros=np.array(zs, dtype=np.complex128),
        unpaired_poles=np.array(ps, dtype=np.complex128),
        pairing_tol=pairing_tol,
    )


def _roots_or_empty(p: Polynomial, trim_tol: float) -> np.ndarray:
    if p.is_zero:
        return np.zeros(0, dtype=np.complex128)
    return poly_roots(p, trim_tol).roots


def _normalized_pair(p: Polynomial, q: Polynomial, mlen: int, nlen: int):
    qv = np.zeros(nlen, dtype=np.complex128)
    qv[: len(q.coeffs)] = q.coeffs
    pv = np.zeros(mlen, dtype=np.complex128)
    pv[: len(p.coeffs)] = p.coeffs
    return pv, qv


def compare(
    f: PowerSeries, order, tol: float | None = None, pairing_tol: float = 1e-3
) -> ComparisonReport:
    """Run the baseline and reduced solvers side by side and pair doublets.

    Roots are taken with trim_tol = 0 on both sides so that any stray
    roundoff-level leading coefficient of the baseline shows up honestly as
    a huge root. `agree` records whether the two approximants coincide up to
    scale (coefficients within 1e-8 after the shared normalization).
    """
    order = as_order(order)
    red = reduced_pade(f, order, cleanup=True, tol=tol)
    cp, cq = classical_pade(f, order)
    reduced_zeros = _roots_or_empty(red.numerator, 0.0)
    reduced_poles = _roots_or_empty(red.denominator, 0.0)
    classical_zeros = _roots_or_empty(cp, 0.0)
    classical_poles = _roots_or_empty(cq, 0.0)
    mlen = max(len(red.numerator.coeffs), len(cp.coeffs))
    nlen = max(len(red.denominator.coeffs), len(cq.coeffs))
    rp, rq = _normalized_pair(red.numerator, red.denominator, mlen, nlen)
    bp, bq = _normalized_pair(cp, cq, mlen, nlen)
    agree = bool(
        np.allclose(rp, bp, atol=1e-8, rtol=0) and np.allclose(rq, bq, atol=1e-8, rtol=0)
    )
    return ComparisonReport(
        order=order,
        reduced=red,
        classical_numerator=cp,
        classical_denominator=cq,
        reduced_zeros=reduced_zeros,
        reduced_poles=reduced_poles,
        classical_zeros=classical_zeros,
        classical_poles=classical_poles,
        reduced_doublets=detect_doublets(reduced_zeros, reduced_poles, pairing_tol),
        classical_doublets=detect_doublets(classical_zeros, classical_poles, pairing_tol),
        agree=agree,
    )
