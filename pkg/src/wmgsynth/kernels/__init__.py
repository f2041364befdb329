"""Hot inner loops with a numba path and a pure-numpy fallback.

The numba path is used when numba imports and WMGSYNTH_DISABLE_NUMBA is
unset (or "0").  Both backends stay importable for comparison:
``get_backend("numba")`` / ``get_backend("numpy")``.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _numpy
from ._numpy import DEADLOCK, EARLY_REVISIT, EXTRA_ENABLED, NOT_CLOSED, OK, WRONG_LABEL

try:
    from . import _numba
except ImportError:  # numba missing
    _numba = None

STATUS_NAMES = {
    OK: "Ok",
    WRONG_LABEL: "WrongLabel",
    EXTRA_ENABLED: "ExtraEnabled",
    DEADLOCK: "Deadlock",
    EARLY_REVISIT: "EarlyRevisit",
    NOT_CLOSED: "NotClosed",
}


def numba_available() -> bool:
    return _numba is not None


def get_backend(name: str | None = None) -> ModuleType:
    """Return the kernel module for ``name`` ("numba", "numpy" or None for the default)."""
    if name is None:
        disabled = os.environ.get("WMGSYNTH_DISABLE_NUMBA", "0") not in ("", "0")
        name = "numpy" if disabled or _numba is None else "numba"
    if name == "numba":
        if _numba is None:
            raise RuntimeError("numba backend requested but numba is not installed")
        return _numba
    if name == "numpy":
        return _numpy
    raise ValueError(f"unknown kernel backend {name!r}")


def set_backend(name: str | None = None) -> str:
    """Rebind the module-level kernels to ``name``; returns the previous backend name."""
    global BACKEND, first_violation, marking_floor, simulate_cycle
    module = get_backend(name)
    previous = globals().get("BACKEND")
    BACKEND = "numba" if module is _numba else "numpy"
    first_violation = module.first_violation
    marking_floor = module.marking_floor
    simulate_cycle = module.simulate_cycle
    return previous


BACKEND: str
set_backend()

__all__ = [
    "BACKEND", "STATUS_NAMES", "get_backend", "set_backend", "numba_available",
    "first_violation", "marking_floor", "simulate_cycle",
    "OK", "WRONG_LABEL", "EXTRA_ENABLED", "DEADLOCK", "EARLY_REVISIT", "NOT_CLOSED",
]
