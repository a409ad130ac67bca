"""Kernel backend selection.

Hot loops live in ``_kernels.py`` in two variants: numba ``@njit`` and pure
numpy. ``PALEY_BACKEND=numpy`` forces the fallback (useful when numba is
unavailable or for benchmarking); ``PALEY_BACKEND=numba`` fails loudly if
numba cannot be imported. Default is numba when importable.
"""

import os

_requested = os.environ.get("PALEY_BACKEND", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(f"PALEY_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

HAS_NUMBA = False
if _requested != "numpy":
    try:
        from numba import njit, prange  # noqa: F401

        HAS_NUMBA = True
    except ImportError:
        if _requested == "numba":
            raise

USE_NUMBA = HAS_NUMBA and _requested != "numpy"

if not USE_NUMBA:

    def njit(*args, **kwargs):
        """No-op decorator standing in for numba.njit."""

        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap

    prange = range


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
