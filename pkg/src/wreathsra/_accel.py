"""Backend selection for the compiled kernels.

Set ``WREATHSRA_NO_NUMBA=1`` to force the pure-numpy paths.  When numba is
missing the numpy paths are used silently.
"""
from __future__ import annotations

import os

try:
    import numba  # noqa: F401
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


def _flag_disabled() -> bool:
    return os.environ.get("WREATHSRA_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}


def use_numba() -> bool:
    """Whether the default dispatch uses the compiled kernels right now."""
    return NUMBA_AVAILABLE and not _flag_disabled()


def backend_name() -> str:
    return "numba" if use_numba() else "numpy"
