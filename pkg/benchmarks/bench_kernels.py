#!/usr/bin/env python3
"""Timing comparison of the numba and pure-numpy kernel builds.

Every op is timed on identical, pre-generated inputs for both builds; the
Jacobi kernel mutates its arguments in place, so each iteration consumes
its own fresh copies prepared outside the timed region. The numba build is
called once per op before timing so JIT compilation never lands in a
measurement.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

import numpy as np

from redpade import (
    Polynomial,
    RationalSpec,
    active_backend,
    reduced_pade,
    set_backend,
    taylor_of_rational,
)
from redpade import _kernels_numpy

try:
    from redpade import _kernels_numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _kernels_numba = None
    HAVE_NUMBA = False

EPS = float(np.finfo(np.float64).eps)


def random_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def jacobi_args(size):
    rng = np.random.default_rng(1000 + size)
    A = random_complex(rng, size, size)
    B = np.ascontiguousarray(A)
    V = np.eye(size, dtype=np.complex128)
    return B.copy(), V.copy(), np.sqrt(size) * EPS, 100 * size


def series_divide_args(count):
    rng = np.random.default_rng(2000 + count)
    num = random_complex(rng, 8)
    den = random_complex(rng, 8)
    den[0] = 1.0 + 0.5j
    return num, den, count


def cauchy_window_args(upto):
    rng = np.random.default_rng(3000 + upto)
    return random_complex(rng, upto), random_complex(rng, 8), upto


def shift_expansion_args(length):
    rng = np.random.default_rng(4000 + length)
    return random_complex(rng, length), 0.375 - 0.25j


CASES = [
    ("jacobi_sweeps 8x8", "jacobi_sweeps", lambda: jacobi_args(8), 200),
    ("jacobi_sweeps 16x16", "jacobi_sweeps", lambda: jacobi_args(16), 50),
    ("jacobi_sweeps 32x32", "jacobi_sweeps", lambda: jacobi_args(32), 10),
    ("series_divide n=64", "series_divide", lambda: series_divide_args(64), 500),
    ("series_divide n=256", "series_divide", lambda: series_divide_args(256), 100),
    ("cauchy_window n=256", "cauchy_window", lambda: cauchy_window_args(256), 500),
    ("shift_expansion n=64", "shift_expansion", lambda: shift_expansion_args(64), 500),
    ("shift_expansion n=256", "shift_expansion", lambda: shift_expansion_args(256), 50),
]


def fresh(args):
    return tuple(a.copy() if isinstance(a, np.ndarray) else a for a in args)


def time_op(module, opname, make_args, loops, repeats=5):
    op = getattr(module, opname)
    op(*fresh(make_args()))  # warm the op (JIT compile, caches)
    best = float("inf")
    for _ in range(repeats):
        pool = [fresh(make_args()) for _ in range(loops)]
        start = time.perf_counter()
        for args in pool:
            op(*args)
        elapsed = time.perf_counter() - start
        best = min(best, elapsed / loops)
    return best


def bench_end_to_end(backend, loops=20, repeats=5):
    spec = RationalSpec(
        Polynomial([3, -1, 2, 0, 1, -2, 1]), Polynomial([2, 1, -1, 3, 0, -1, 1])
    )
    f = taylor_of_rational(spec, count=21)
    previous = set_backend(backend)
    try:
        reduced_pade(f, (10, 10))  # warm
        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            for _ in range(loops):
                reduced_pade(f, (10, 10))
            elapsed = time.perf_counter() - start
            best = min(best, elapsed / loops)
        return best
    finally:
        if previous:
            set_backend(previous)


def fmt(seconds):
    if seconds >= 1e-3:
        return f"{seconds * 1e3:8.3f} ms"
    return f"{seconds * 1e6:8.1f} us"


def main():
    print(f"active backend by default: {active_backend()}")
    if not HAVE_NUMBA:
        print("numba is not importable: timing the pure-numpy build only")
    header = f"{'case':<24}{'numpy':>14}"
    if HAVE_NUMBA:
        header += f"{'numba':>14}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, opname, make_args, loops in CASES:
        t_np = time_op(_kernels_numpy, opname, make_args, loops)
        line = f"{label:<24}{fmt(t_np):>14}"
        if HAVE_NUMBA:
            t_nb = time_op(_kernels_numba, opname, make_args, loops)
            line += f"{fmt(t_nb):>14}{t_np / t_nb:>9.1f}x"
        print(line)
    t_np = bench_end_to_end("numpy")
    line = f"{'reduced_pade (10,10)':<24}{fmt(t_np):>14}"
    if HAVE_NUMBA:
        t_nb = bench_end_to_end("numba")
        line += f"{fmt(t_nb):>14}{t_np / t_nb:>9.1f}x"
    print(line)


if __name__ == "__main__":
    main()
