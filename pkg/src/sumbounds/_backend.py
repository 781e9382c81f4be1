"""Kernel backend selection.

Set ``SUMBOUNDS_DISABLE_NUMBA=1`` to force the pure-numpy kernels. Without
the flag numba is used when it imports cleanly.
"""
import os

_FLAG = "SUMBOUNDS_DISABLE_NUMBA"


def _numba_available():
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def numba_requested():
    return os.environ.get(_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


USE_NUMBA = numba_requested() and _numba_available()
BACKEND = "numba" if USE_NUMBA else "numpy"
