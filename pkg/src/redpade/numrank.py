"""SVD-based numerical rank decisions.

The decomposition is an authored one-sided Jacobi iteration (hot loop in the
selected kernel backend), chosen over a blocked bidiagonalization because the
rank decisions downstream hinge on the accuracy of the small singular values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .errors import ConvergenceFailure

__all__ = ["SvdResult", "RankReport", "svd", "numerical_rank", "null_space"]

_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class SvdResult:
    """Full decomposition A = U @ Sigma @ V^H.

    U is M x M unitary, V is N x N unitary, `singular` holds the min(M, N)
    singular values descending; Sigma is `singular` embedded on the main
    diagonal of an M x N matrix.
    """

    U: np.ndarray
    singular: np.ndarray
    V: np.ndarray

    @property
    def rows(self) -> int:
        return self.U.shape[0]

    @property
    def cols(self) -> int:
        return self.V.shape[0]


@dataclass(frozen=True)
class RankReport:
    """Numerical rank of a matrix under a tolerance.

    rank counts singular values strictly greater than `tolerance`; `gap` is
    sigma_rank / sigma_rank+1 (+inf when there is nothing on one side of the
    cut or the first discarded value is exactly zero); `well_determined`
    records whether the gap cleared the threshold the caller used.
    """

    rank: int
    tolerance: float
    gap: float
    singular: np.ndarray
    well_determined: bool


def _complete_unitary(B: np.ndarray, sig: np.ndarray, M: int) -> np.ndarray:
    """Build an M x M unitary whose column j represents B's column j.

    A column's direction is trusted only if its norm survives Gram-Schmidt
    against the columns accepted before it; rotation residue at far-below-
    roundoff scale collapses under that projection, and its slot is filled by
    an orthonormal completion vector instead (the associated singular value
    is noise at working precision, so reconstruction is unaffected).
    """
    U = np.zeros((M, M), dtype=np.complex128)
    taken: list[int] = []

    def project_out(v: np.ndarray) -> np.ndarray:
        for _ in range(2):  # re-orthogonalize for machine-precision columns
            if taken:
                Q = U[:, taken]
                v = v - Q @ (Q.conj().T @ v)
        return v

    for j in range(B.shape[1]):
        if sig[j] <= 0.0:
            continue
        v = project_out(B[:, j].copy())
        norm = np.linalg.norm(v)
        if norm >= 0.5 * sig[j]:
            U[:, j] = v / norm
            taken.append(j)
    for j in range(M):
        if j in taken:
            continue
        # residual columns of I - Q Q^H are the projected identity candidates;
        # the largest one is the direction least represented so far
        residual = np.eye(M, dtype=np.complex128)
        if taken:
            Q = U[:, taken]
            residual -= Q @ Q.conj().T
        best = int(np.argmax(np.linalg.norm(residual, axis=0)))
        v = project_out(residual[:, best])
        norm = np.linalg.norm(v)
        if norm <= M * _EPS:
            raise ConvergenceFailure("could not complete an orthonormal basis")
        U[:, j] = v / norm
        taken.append(j)
    return U


def svd(A: np.ndarray, max_sweeps: int | None = None) -> SvdResult:
    """Singular value decomposition by one-sided Jacobi rotations.

    Rotations are applied to columns (the matrix is implicitly transposed
    when M < N); the sweep cap defaults to 100 * min(M, N) and overrunning it
    raises ConvergenceFailure. Degenerate shapes (zero rows or columns) give
    an empty singular spectrum and identity factors.
    """
    A = np.ascontiguousarray(A, dtype=np.complex128)
    if A.ndim != 2:
        raise ValueError("svd expects a 2-d matrix")
    if A.size and not np.all(np.isfinite(A)):
        raise ValueError("svd input has non-finite entries")
    M, N = A.shape
    if M == 0 or N == 0:
        return SvdResult(
            U=np.eye(M, dtype=np.complex128),
            singular=np.zeros(0, dtype=np.float64),
            V=np.eye(N, dtype=np.complex128),
        )
    if M < N:
        flipped = svd(A.conj().T, max_sweeps=max_sweeps)
        return SvdResult(U=flipped.V, singular=flipped.singular, V=flipped.U)
    cap = 100 * min(M, N) if max_sweeps is None else max_sweeps
    B = A.copy()
    V = np.eye(N, dtype=np.complex128)
    sweeps = kernels().jacobi_sweeps(B, V, np.sqrt(M) * _EPS, cap)
    if sweeps < 0:
        raise ConvergenceFailure(f"no rotation-free sweep within {cap} sweeps")
    sig = np.sqrt((np.abs(B) ** 2).sum(axis=0))
    order = np.argsort(-sig, kind="stable")
    sig = sig[order]
    U = _complete_unitary(B[:, order], sig, M)
    return SvdResult(U=U, singular=sig, V=np.ascontiguousarray(V[:, order]))


def numerical_rank(
    res: SvdResult, tol: float | None = None, gap_threshold: float = 1e6
) -> RankReport:
    """Count singular values strictly above tol (default max(M,N) * ulp(sigma_1))."""
    sig = res.singular
    if tol is None:
        s1 = float(sig[0]) if len(sig) else 0.0
        tol = max(res.rows, res.cols, 1) * float(np.spacing(s1))
    elif tol <= 0:
        raise ValueError("tol must be positive when provided")
    rank = int(np.sum(sig > tol))
    if rank == len(sig) or rank == 0 or sig[rank] == 0.0:
        gap = float("inf")
    else:
        gap = float(sig[rank - 1] / sig[rank])
    return RankReport(
        rank=rank,
        tolerance=float(tol),
        gap=gap,
        singular=sig,
        well_determined=bool(gap >= gap_threshold),
    )


def null_space(A: np.ndarray, tol: float | None = None) -> list[np.ndarray]:
    """Orthonormal numerical null-space basis: trailing right singular vectors."""
    res = svd(A)
    report = numerical_rank(res, tol)
    return [np.array(res.V[:, j]) for j in range(report.rank, res.cols)]
