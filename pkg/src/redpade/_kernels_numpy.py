"""Pure-numpy implementations of the hot kernels.

Reference semantics for the numba backend in `_kernels_numba`; selected at
runtime via the PADE_BACKEND environment flag (see `redpade.backend`). All
arrays are contiguous complex128; every function here must stay loop-for-loop
equivalent to its numba twin.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "numpy"


def jacobi_sweeps(B, V, tol, max_sweeps):
    """Orthogonalize the columns of B in place by one-sided Jacobi rotations.

    B is M x N with M >= N; V (N x N, starts as identity) accumulates the
    right-hand rotations so that B_final = B_initial @ V throughout. Returns
    the number of sweeps used, or -1 if no rotation-free sweep occurred
    within max_sweeps.
    """
    N = B.shape[1]
    for sweep in range(max_sweeps):
        rotated = 0
        for p in range(N - 1):
            for q in range(p + 1, N):
                alpha = np.vdot(B[:, p], B[:, p]).real
                beta = np.vdot(B[:, q], B[:, q]).real
                gamma = np.vdot(B[:, p], B[:, q])
                ag = abs(gamma)
                # sqrt before multiplying so the threshold survives denormal
                # column norms; a zero threshold means at least one column is
                # numerically nothing, so there is no direction to separate
                threshold = tol * np.sqrt(alpha) * np.sqrt(beta)
                if threshold == 0.0 or ag <= threshold:
                    continue
                rotated += 1
                g = gamma / ag
                zeta = (beta - alpha) / (2.0 * ag)
                if zeta == 0.0:
                    t = 1.0
                elif abs(zeta) < 1.0:
                    t = np.sign(zeta) / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                else:
                    # same tangent, written so zeta*zeta cannot overflow
                    inv = 1.0 / zeta
                    t = np.sign(zeta) / (abs(zeta) * (1.0 + np.sqrt(1.0 + inv * inv)))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t
                gbar = g.conjugate()
                bp = B[:, p].copy()
                B[:, p] = c * bp - (gbar * s) * B[:, q]
                B[:, q] = (s * g) * bp + c * B[:, q]
                vp = V[:, p].copy()
                V[:, p] = c * vp - (gbar * s) * V[:, q]
                V[:, q] = (s * g) * vp + c * V[:, q]
        if rotated == 0:
            return sweep + 1
    return -1


def series_divide(num, den, count):
    """First `count` Taylor coefficients of num(z)/den(z); den[0] != 0."""
    c = np.zeros(count, dtype=np.complex128)
    nlen = num.shape[0]
    dlen = den.shape[0]
    for k in range(count):
        acc = num[k] if k < nlen else 0.0 + 0.0j
        jmax = min(k, dlen - 1)
        if jmax >= 1:
            acc -= np.dot(den[1 : jmax + 1], c[k - jmax : k][::-1])
        c[k] = acc / den[0]
    return c


def cauchy_window(c, q, upto):
    """First `upto` coefficients of the product of series c with polynomial q."""
    if upto == 0:
        return np.zeros(0, dtype=np.complex128)
    return np.convolve(c[:upto], q)[:upto]


def shift_expansion(coeffs, t):
    """Coefficients of sum_k coeffs[k] * x^k re-expanded in powers of (x - t)."""
    b = coeffs.copy()
    L = b.shape[0]
    for i in range(L - 1):
        for j in range(L - 2, i - 1, -1):
            b[j] = b[j] + t * b[j + 1]
    return b
