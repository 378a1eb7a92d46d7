"""Kernel backend selection.

The hot numeric kernels exist twice: a numba @njit build (`_kernels_numba`)
and a pure-numpy build (`_kernels_numpy`) with identical semantics. The
active one is chosen once, lazily, from the PADE_BACKEND environment
variable ("numba" or "numpy"); unset means numba when importable, numpy
otherwise. `set_backend` switches at runtime for tests and benchmarks.
"""

from __future__ import annotations

import os
import warnings

ENV_VAR = "PADE_BACKEND"
_active = None


def _load(name: str):
    if name == "numpy":
        from . import _kernels_numpy

        return _kernels_numpy
    if name == "numba":
        from . import _kernels_numba

        return _kernels_numba
    raise ValueError(f"unknown {ENV_VAR} value {name!r}: expected 'numba' or 'numpy'")


def _resolve_default():
    choice = os.environ.get(ENV_VAR, "").strip().lower()
    if choice:
        return _load(choice)
    try:
        return _load("numba")
    except ImportError:
        warnings.warn(
            "numba is not importable; falling back to the pure-numpy kernels "
            f"(set {ENV_VAR}=numpy to silence this)",
            RuntimeWarning,
            stacklevel=2,
        )
        return _load("numpy")


def kernels():
    """Return the active kernel module."""
    global _active
    if _active is None:
        _active = _resolve_default()
    return _active


def active_backend() -> str:
    """Name of the active kernel backend ("numba" or "numpy")."""
    return kernels().BACKEND_NAME


def set_backend(name: str) -> str:
    """Force a backend by name; returns the previously active name."""
    global _active
    previous = _active.BACKEND_NAME if _active is not None else ""
    _active = _load(name)
    return previous
