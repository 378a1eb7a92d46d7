"""Essential indices, minimal denominators, cleanup, and the reduced solver."""

import numpy as np
import pytest

from redpade import (
    EssentialIndices,
    KernelDimensionMismatch,
    PowerSeries,
    classical_pade,
    essential_indices,
    minimal_denominator,
    numerator_from_denominator,
    order_condition_residual,
    poly_roots,
    reduced_pade,
)
from redpade.reduced import cleanup_denominator, cleanup_numerator
from tests.conftest import taylor


class TestEssentialIndices:
    def test_rational_of_full_type(self, simple_rational):
        f = taylor(simple_rational, 5)
        idx = essential_indices(f, (2, 2))
        assert (idx.kappa, idx.mu1, idx.mu2) == (2, 2, 3)

    def test_inside_the_infinite_block(self, simple_rational):
        f = taylor(simple_rational, 9)
        idx = essential_indices(f, (4, 4))
        assert (idx.kappa, idx.mu1, idx.mu2) == (2, 2, 7)

    def test_geometric_series(self):
        f = PowerSeries([1, 1, 1])
        idx = essential_indices(f, (1, 1))
        assert (idx.kappa, idx.mu1, idx.mu2) == (1, 1, 2)

    def test_truncation_when_n_is_zero(self):
        f = PowerSeries([1, 2, 3])
        idx = essential_indices(f, (2, 0))
        assert (idx.kappa, idx.mu1, idx.mu2) == (0, 2, 3)

    def test_constant_function_high_denominator_order(self):
        # c = (1, 0, 0): the index matrix has rank 2.
        f = PowerSeries([1, 0, 0])
        idx = essential_indices(f, (0, 2))
        assert idx.kappa == 2
        assert (idx.mu1, idx.mu2) == (0, 1)

    def test_invariants_on_random_corpus(self, random_rationals):
        from redpade import Polynomial, RationalSpec

        for num, den, m, n in random_rationals[:20]:
            f = taylor(RationalSpec(Polynomial(num), Polynomial(den)), m + n + 2)
            idx = essential_indices(f, (m, n))
            assert idx.mu1 + idx.mu2 == 2 * m + 1
            assert idx.mu1 <= m < idx.mu2
            assert 0 <= idx.kappa <= n

    def test_inconsistent_fields_rejected(self):
        with pytest.raises(ValueError):
            EssentialIndices(order=(2, 2), kappa=2, mu1=0, mu2=3, rank_report=None)


class TestMinimalDenominator:
    def test_geometric_series(self):
        f = PowerSeries([1, 1, 1])
        idx = essential_indices(f, (1, 1))
        q, report = minimal_denominator(f, (1, 1), idx)
        assert np.allclose(q.coeffs, np.array([1, -1]) / np.sqrt(2), atol=1e-14)
        assert report.rank == idx.kappa

    def test_exponential_series(self):
        f = PowerSeries([1, 1, 0.5])
        idx = essential_indices(f, (1, 1))
        q, _ = minimal_denominator(f, (1, 1), idx)
        assert np.allclose(q.coeffs, np.array([1, -0.5]) / np.hypot(1, 0.5), atol=1e-14)

    def test_unit_norm_and_real_positive_anchor(self, offset_rational):
        f = taylor(offset_rational, 6)
        idx = essential_indices(f, (2, 3))
        q, _ = minimal_denominator(f, (2, 3), idx)
        assert np.linalg.norm(q.coeffs) == pytest.approx(1.0)
        lead = q.coeffs[np.flatnonzero(np.abs(q.coeffs) > 1e-8)[0]]
        assert lead.imag == pytest.approx(0.0, abs=1e-15)
        assert lead.real > 0

    def test_order_mismatch_rejected(self):
        f = PowerSeries([1, 1, 1])
        idx = essential_indices(f, (1, 1))
        with pytest.raises(ValueError):
            minimal_denominator(f, (2, 1), idx)

    def test_kernel_dimension_mismatch(self):
        f = PowerSeries([1, 1, 1])
        idx = essential_indices(f, (1, 1))
        with pytest.raises(KernelDimensionMismatch) as info:
            minimal_denominator(f, (1, 1), idx, tol=2.0)
        assert info.value.dimension != 1


class TestCleanup:
    def test_even_denominator_odd_entries_zeroed(self, even_pole_rational):
        f = taylor(even_pole_rational, 11)
        idx = essential_indices(f, (3, 7))
        assert idx.kappa == 5
        q, _ = minimal_denominator(f, (3, 7), idx)
        cleaned, zeroed = cleanup_denominator(f, idx, q)
        assert zeroed == frozenset({1, 3, 5})
        assert np.all(cleaned.coeffs[[1, 3, 5]] == 0)
        assert np.linalg.norm(cleaned.coeffs) == pytest.approx(1.0)

    def test_clean_input_left_alone(self, simple_rational):
        f = taylor(simple_rational, 5)
        idx = essential_indices(f, (2, 2))
        q, _ = minimal_denominator(f, (2, 2), idx)
        cleaned, zeroed = cleanup_denominator(f, idx, q)
        assert zeroed == frozenset()
        assert np.allclose(cleaned.coeffs, q.coeffs, atol=0)

    def test_numerator_entries_zeroed(self, even_pole_rational):
        f = taylor(even_pole_rational, 11)
        red = reduced_pade(f, (3, 7))
        assert red.zeroed_p == frozenset({2, 3})
        assert np.all(red.numerator.coeffs[[2, 3]] == 0)


class TestNumeratorSynthesis:
    def test_window_product(self, simple_rational):
        f = taylor(simple_rational, 5)
        red = reduced_pade(f, (2, 2))
        manual = np.convolve(f.coeffs[:3], red.denominator.coeffs)[:3]
        assert np.allclose(red.numerator.coeffs, manual, atol=1e-12)

    def test_denominator_degree_capped(self):
        f = PowerSeries([1, 1, 1])
        from redpade import Polynomial

        with pytest.raises(ValueError):
            numerator_from_denominator(f, (1, 1), Polynomial([1, 1, 1]))


class TestReducedPade:
    def test_reproduces_simple_rational(self, simple_rational):
        f = taylor(simple_rational, 5)
        red = reduced_pade(f, (2, 2))
        scale = -1 / np.linalg.norm([-2.1, 1.1, 1])
        assert np.allclose(red.denominator.coeffs, np.array([-2.1, 1.1, 1]) * scale, atol=1e-10)
        assert np.allclose(red.numerator.coeffs, np.array([-2, -1, 1]) * scale, atol=1e-10)
        assert red.deficiency == 0
        assert red.baker_exists
        assert not red.warnings

    def test_inside_block_same_function_lower_degree(self, simple_rational):
        f = taylor(simple_rational, 9)
        red = reduced_pade(f, (4, 4))
        assert red.indices.kappa == 2
        assert red.numerator.coeffs.shape == (5,)
        assert red.denominator.coeffs.shape == (3,)
        assert red.zeroed_p == frozenset({3, 4})
        assert red.numerator.effective_degree == 2
        assert red.denominator.effective_degree == 2

    def test_pure_monomial(self):
        f = PowerSeries([0, 1])
        red = reduced_pade(f, (0, 1))
        assert np.array_equal(red.denominator.coeffs, [0, 1])
        assert np.array_equal(red.numerator.coeffs, [0])
        assert red.deficiency == 1
        assert not red.baker_exists
        assert red.zeroed_q == frozenset({0})
        assert red.zeroed_p == frozenset({0})

    def test_degenerate_window(self):
        f = PowerSeries([0, 0, 0, 0, 0, 1])
        red = reduced_pade(f, (0, 2))
        assert red.degenerate_window
        assert np.array_equal(red.denominator.coeffs, [1])
        assert red.numerator.is_zero
        assert red.warnings

    def test_stable_under_tolerance_choice(self, simple_rational):
        f = taylor(simple_rational, 5)
        a = reduced_pade(f, (2, 2), tol=1e-12)
        b = reduced_pade(f, (2, 2), tol=1e-8)
        assert np.array_equal(a.denominator.coeffs, b.denominator.coeffs)
        assert np.array_equal(a.numerator.coeffs, b.numerator.coeffs)
        assert a.indices.kappa == b.indices.kappa

    def test_cleanup_disabled_keeps_strays(self, even_pole_rational):
        f = taylor(even_pole_rational, 11)
        red = reduced_pade(f, (3, 7), cleanup=False)
        assert not red.cleanup_applied
        assert red.zeroed_q == frozenset() and red.zeroed_p == frozenset()
        assert red.deficiency == 0
        assert red.baker_exists  # still decided by a rank test
        assert np.any(red.denominator.coeffs[[1, 3, 5]] != 0)

    def test_roots_reproduce_poles_and_zeros(self, offset_rational):
        f = taylor(offset_rational, 10)
        for order in [(2, 3), (4, 4), (3, 5)]:
            red = reduced_pade(f, order)
            zeros = poly_roots(red.numerator).roots
            poles = poly_roots(red.denominator).roots
            assert np.allclose(sorted(z.real for z in zeros), [-1.01], atol=1e-6)
            assert np.allclose(sorted(p.real for p in poles), [-2, 2.01], atol=1e-6)

    def test_tolerance_must_be_positive(self, simple_rational):
        f = taylor(simple_rational, 5)
        with pytest.raises(ValueError):
            reduced_pade(f, (2, 2), tol=0.0)


class TestClassicalPade:
    def test_agrees_with_reduced_when_kernel_is_simple(self):
        f = PowerSeries([1, 1, 0.5])
        p, q = classical_pade(f, (1, 1))
        red = reduced_pade(f, (1, 1))
        assert np.allclose(q.coeffs, red.denominator.coeffs, atol=1e-12)
        assert np.allclose(p.coeffs, red.numerator.coeffs, atol=1e-12)

    def test_order_condition_still_holds(self, simple_rational):
        f = taylor(simple_rational, 9)
        p, q = classical_pade(f, (4, 4))
        res = order_condition_residual(f, p, q, (4, 4))
        assert np.all(res[:9] <= 1e-10 * np.max(np.abs(f.coeffs)))

    def test_full_length_vector(self, simple_rational):
        f = taylor(simple_rational, 9)
        p, q = classical_pade(f, (4, 4))
        assert q.coeffs.shape == (5,)
        assert p.coeffs.shape == (5,)
        assert np.linalg.norm(q.coeffs) == pytest.approx(1.0)


class TestOrderCondition:
    def test_residual_small_through_required_order(self, offset_rational):
        f = taylor(offset_rational, 8)
        red = reduced_pade(f, (2, 3))
        res = order_condition_residual(f, red.numerator, red.denominator, (2, 3))
        assert np.all(res[:6] <= 1e-12 * np.max(np.abs(f.coeffs)))

    def test_deficiency_shifts_the_error_order(self):
        # f(z) = z at (0,1): P = 0, Q = z, so f*Q - P = z^2 and the divided
        # error f - P/Q = z starts exactly at order m+n+1-delta = 1.
        f = PowerSeries([0, 1, 0, 0])
        red = reduced_pade(f, (0, 1))
        assert red.deficiency == 1
        res = order_condition_residual(f, red.numerator, red.denominator, (0, 1))
        assert np.all(res[:2] <= 1e-15)
        first_nonzero = int(np.flatnonzero(res > 1e-12)[0])
        assert first_nonzero == 0 + 1 + 1  # m + n + 1
        assert res[first_nonzero] == pytest.approx(1.0)  # nonzero leading term
        # dividing by Q = z^delta * (unit) shifts the error down by delta
        assert first_nonzero - red.deficiency == 1

    def test_center_mismatch_rejected(self, simple_rational):
        from redpade import Polynomial

        f = taylor(simple_rational, 5)
        with pytest.raises(ValueError):
            order_condition_residual(
                f, Polynomial([1], center=1), Polynomial([1]), (0, 0)
            )
