"""numba-compiled implementations of the hot kernels.

Loop-for-loop equivalent to `_kernels_numpy`; compiled lazily on first call
and cached on disk. Raises ImportError at import time when numba is missing,
which `redpade.backend` turns into a numpy fallback.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND_NAME = "numba"


@njit(cache=True)
def jacobi_sweeps(B, V, tol, max_sweeps):
    M, N = B.shape
    for sweep in range(max_sweeps):
        rotated = 0
        for p in range(N - 1):
            for q in range(p + 1, N):
                alpha = 0.0
                beta = 0.0
                gamma = 0.0 + 0.0j
                for i in range(M):
                    bip = B[i, p]
                    biq = B[i, q]
                    alpha += bip.real * bip.real + bip.imag * bip.imag
                    beta += biq.real * biq.real + biq.imag * biq.imag
                    gamma += bip.conjugate() * biq
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
                gs = gbar * s
                gg = g * s
                for i in range(M):
                    bip = B[i, p]
                    biq = B[i, q]
                    B[i, p] = c * bip - gs * biq
                    B[i, q] = gg * bip + c * biq
                NV = V.shape[0]
                for i in range(NV):
                    vip = V[i, p]
                    viq = V[i, q]
                    V[i, p] = c * vip - gs * viq
                    V[i, q] = gg * vip + c * viq
        if rotated == 0:
            return sweep + 1
    return -1


@njit(cache=True)
def series_divide(num, den, count):
    c = np.zeros(count, dtype=np.complex128)
    nlen = num.shape[0]
    dlen = den.shape[0]
    for k in range(count):
        acc = 0.0 + 0.0j
        if k < nlen:
            acc = num[k]
        jmax = min(k, dlen - 1)
        for j in range(1, jmax + 1):
            acc -= den[j] * c[k - j]
        c[k] = acc / den[0]
    return c


@njit(cache=True)
def cauchy_window(c, q, upto):
    out = np.zeros(upto, dtype=np.complex128)
    qlen = q.shape[0]
    for k in range(upto):
        acc = 0.0 + 0.0j
        jmax = min(k, qlen - 1)
        for j in range(jmax + 1):
            acc += q[j] * c[k - j]
        out[k] = acc
    return out


@njit(cache=True)
def shift_expansion(coeffs, t):
    b = coeffs.copy()
    L = b.shape[0]
    for i in range(L - 1):
        for j in range(L - 2, i - 1, -1):
            b[j] = b[j] + t * b[j + 1]
    return b
