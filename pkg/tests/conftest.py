"""Shared fixtures: reference rational functions and a seeded random corpus."""

import random

import pytest

from redpade import Polynomial, PowerSeries, RationalSpec, taylor_of_rational
from redpade.oracle import exact_taylor, qc


def _spec(num, den):
    return RationalSpec(Polynomial(num), Polynomial(den))


@pytest.fixture(scope="session")
def simple_rational():
    """(z+1)(z-2) / ((z+2.1)(z-1)): zeros {-1, 2}, poles {-2.1, 1}."""
    return _spec([-2, -1, 1], [-2.1, 1.1, 1])


@pytest.fixture(scope="session")
def offset_rational():
    """(z+1.01) / ((z+2)(z-2.01)): zero -1.01, poles {-2, 2.01}."""
    return _spec([1.01, 1], [-4.02, -0.01, 1])


@pytest.fixture(scope="session")
def even_pole_rational():
    """(z+1.01) / (z^4+3z^2-4.01): numerator odd/even structure in the denominator."""
    return _spec([1.01, 1], [-4.01, 0, 3, 0, 1])


def taylor(spec: RationalSpec, count: int, center=0j) -> PowerSeries:
    return taylor_of_rational(spec, center=center, count=count)


def _draw_fixture(rng: random.Random):
    """One random integer-coefficient rational plus an order, window-nonzero."""
    while True:
        dp = rng.randrange(0, 5)
        dq = rng.randrange(0, 5)
        num = [rng.randint(-5, 5) for _ in range(dp + 1)]
        den = [rng.randint(-5, 5) for _ in range(dq + 1)]
        if not any(num) or num[-1] == 0 or den[-1] == 0:
            continue
        if den[0] == 0:  # pole at the expansion point
            continue
        m = rng.randrange(0, 7)
        n = rng.randrange(0, 7)
        coeffs = exact_taylor([qc(a) for a in num], [qc(b) for b in den], m + n + 2)
        lo = max(0, m - n + 1)
        if all(x.is_zero for x in coeffs[lo : m + n + 1]):
            continue  # identically-zero coefficient window
        return num, den, m, n


@pytest.fixture(scope="session")
def random_rationals():
    """50 reproducible integer-coefficient rationals with random orders m, n <= 6."""
    rng = random.Random(8211)
    return [_draw_fixture(rng) for _ in range(50)]
