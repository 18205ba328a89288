"""Runtime switches read once at import time.

``STRONGCOAL_NUMBA=0`` forces the pure Python/numpy kernels even when numba
is importable.  ``STRONGCOAL_MAX_ORDER`` overrides the largest order the
exact solvers accept.
"""

import os

DEFAULT_MAX_ORDER = 20

# 2**n table scans beyond this are refused regardless of MAX_ORDER.
SCAN_MAX_ORDER = 24

# Bit-vectors handed to the compiled kernels are int64.
NUMBA_MAX_ORDER = 62


def _env_flag(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    return raw.strip().lower() not in ("0", "false", "no", "off", "")


try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _env_flag("STRONGCOAL_NUMBA", True)

MAX_ORDER = int(os.environ.get("STRONGCOAL_MAX_ORDER", DEFAULT_MAX_ORDER))


class CapacityError(ValueError):
    """Raised when a graph is larger than an exact routine will accept."""

    def __init__(self, n, limit, what="exact search"):
        super().__init__(f"order {n} exceeds the {what} limit of {limit} vertices")
        self.n = n
        self.limit = limit
