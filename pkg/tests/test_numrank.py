"""One-sided Jacobi SVD, numerical rank with gap reporting, null spaces."""

import numpy as np
import pytest

from redpade import ConvergenceFailure, null_space, numerical_rank, svd


def _random_complex(rng, m, n):
    return rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))


def _check_factorization(A, res, tol=1e-13):
    U, s, V = res.U, res.singular, res.V
    M, N = A.shape
    r = min(M, N)
    assert U.shape == (M, M) and V.shape == (N, N) and s.shape == (r,)
    scale = max(s[0] if r else 0.0, 1.0)
    S = np.zeros((M, N))
    S[:r, :r] = np.diag(s)
    assert np.linalg.norm(A - U @ S @ V.conj().T, 2) <= tol * scale
    assert np.linalg.norm(U.conj().T @ U - np.eye(M), 2) <= tol * scale
    assert np.linalg.norm(V.conj().T @ V - np.eye(N), 2) <= tol * scale
    assert np.all(np.diff(s) <= 0)
    assert np.all(s >= 0)


class TestSvd:
    def test_identity(self):
        res = svd(np.eye(3))
        assert np.allclose(res.singular, [1, 1, 1])
        _check_factorization(np.eye(3), res)

    def test_diagonal_values_sorted(self):
        A = np.diag([1.0, 3.0, 2.0])
        res = svd(A)
        assert np.allclose(res.singular, [3, 2, 1])

    def test_matches_reference_on_random(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            m = int(rng.integers(1, 9))
            n = int(rng.integers(1, 9))
            A = _random_complex(rng, m, n)
            res = svd(A)
            _check_factorization(A, res)
            ref = np.linalg.svd(A, compute_uv=False)
            assert np.allclose(res.singular, ref, rtol=1e-12, atol=1e-12)

    def test_wide_matrices(self):
        rng = np.random.default_rng(12)
        A = _random_complex(rng, 2, 7)
        _check_factorization(A, svd(A))

    def test_rank_deficient(self):
        rng = np.random.default_rng(13)
        u = _random_complex(rng, 5, 2)
        v = _random_complex(rng, 2, 4)
        A = u @ v  # rank 2
        res = svd(A)
        _check_factorization(A, res)
        assert res.singular[2] <= 1e-13 * res.singular[0]

    def test_zero_matrix(self):
        res = svd(np.zeros((3, 2)))
        assert np.allclose(res.singular, 0)
        _check_factorization(np.zeros((3, 2)), res)

    def test_empty_dimensions(self):
        res = svd(np.zeros((0, 4)))
        assert res.singular.shape == (0,)
        assert res.U.shape == (0, 0) and res.V.shape == (4, 4)
        res = svd(np.zeros((3, 0)))
        assert res.U.shape == (3, 3) and res.V.shape == (0, 0)

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            svd(np.array([[1.0, np.nan]]))

    def test_sweep_budget_exhaustion(self):
        A = np.array([[1.0, 1.0], [0.0, 1.0]])
        with pytest.raises(ConvergenceFailure):
            svd(A, max_sweeps=1)


class TestNumericalRank:
    def test_strictly_greater_than_tolerance(self):
        res = svd(np.diag([2.0, 1.0]))
        report = numerical_rank(res, tol=1.0)
        assert report.rank == 1  # sigma == tol does not count

    def test_default_tolerance_kills_roundoff_zeros(self):
        rng = np.random.default_rng(17)
        u = _random_complex(rng, 6, 3)
        v = _random_complex(rng, 3, 6)
        report = numerical_rank(svd(u @ v))
        assert report.rank == 3

    def test_tolerance_must_be_positive(self):
        res = svd(np.eye(2))
        with pytest.raises(ValueError):
            numerical_rank(res, tol=0.0)
        with pytest.raises(ValueError):
            numerical_rank(res, tol=-1e-3)

    def test_monotone_in_tolerance(self):
        rng = np.random.default_rng(19)
        A = _random_complex(rng, 7, 5)
        res = svd(A)
        ladder = [1e-15, 1e-10, 1e-5, 1e-1, 1.0, 10.0]
        ranks = [numerical_rank(res, tol=t).rank for t in ladder]
        assert ranks == sorted(ranks, reverse=True)

    def test_gap_ratio(self):
        res = svd(np.diag([8.0, 2.0, 1.0]))
        report = numerical_rank(res, tol=4.0)
        assert report.rank == 1
        assert report.gap == pytest.approx(4.0)

    def test_gap_infinite_at_rank_zero(self):
        res = svd(np.diag([1.0, 0.5]))
        report = numerical_rank(res, tol=2.0)
        assert report.rank == 0
        assert report.gap == np.inf

    def test_gap_infinite_at_full_rank(self):
        res = svd(np.diag([3.0, 2.0]))
        report = numerical_rank(res, tol=1e-6)
        assert report.rank == 2
        assert report.gap == np.inf

    def test_gap_infinite_when_next_value_vanishes(self):
        res = svd(np.diag([1.0, 0.0]))
        report = numerical_rank(res, tol=1e-300)
        assert report.rank == 1
        assert report.gap == np.inf

    def test_well_determined_threshold(self):
        wide = numerical_rank(svd(np.diag([1.0, 1e-7])), tol=1e-3)
        assert wide.gap == pytest.approx(1e7)
        assert wide.well_determined
        narrow = numerical_rank(svd(np.diag([1.0, 0.5])), tol=0.75)
        assert narrow.gap == pytest.approx(2.0)
        assert not narrow.well_determined

    def test_empty_matrix_rank_zero(self):
        report = numerical_rank(svd(np.zeros((0, 3))))
        assert report.rank == 0
        assert report.gap == np.inf


class TestNullSpace:
    def test_duplicated_columns(self):
        A = np.array([[1.0, 1.0], [2.0, 2.0]])
        vs = null_space(A)
        assert len(vs) == 1
        v = vs[0]
        assert np.linalg.norm(A @ v) <= 1e-14
        # direction is (1, -1)/sqrt(2) up to phase
        assert abs(abs(np.vdot(v, np.array([1, -1]) / np.sqrt(2))) - 1) < 1e-12

    def test_full_rank_has_empty_null_space(self):
        assert null_space(np.eye(3)) == []

    def test_residuals_bounded_by_next_singular_value(self):
        rng = np.random.default_rng(23)
        for _ in range(10):
            A = _random_complex(rng, 6, 8)
            res = svd(A)
            report = numerical_rank(res, tol=0.5)
            vs = null_space(A, tol=0.5)
            assert len(vs) == A.shape[1] - report.rank
            bound = (res.singular[report.rank] if report.rank < len(res.singular) else 0.0)
            for v in vs:
                assert np.linalg.norm(A @ v) <= bound + 1e-12 * res.singular[0]
