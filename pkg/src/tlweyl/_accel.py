"""Optional numba acceleration.

Set ``TLWEYL_NUMBA=0`` in the environment to force the pure-numpy kernels,
which is also what happens when numba cannot be imported.
"""
import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is optional
    numba = None

USE_NUMBA = numba is not None and os.environ.get("TLWEYL_NUMBA", "1").lower() not in ("0", "false", "no", "off")


def njit(*args, **kwargs):
    """``numba.njit`` when acceleration is on, otherwise a no-op decorator."""
    if USE_NUMBA:
        kwargs.setdefault("cache", True)
        return numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda f: f
