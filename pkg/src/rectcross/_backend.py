"""Kernel selection: the compiled extension when importable, else the pure-Python twin.

Set ``RECTCROSS_BACKEND=python`` to force the fallback.
"""
import os

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

AVAILABLE = {"python": _pykernels}
if _compiled is not None:
    AVAILABLE["cython"] = _compiled

kernels = _compiled if _compiled is not None else _pykernels
if os.environ.get("RECTCROSS_BACKEND") == "python":
    kernels = _pykernels


def use(name):
    """Switch the process-wide kernel module; returns the previous name."""
    global kernels
    if name not in AVAILABLE:
        raise ValueError(f"backend {name!r} not available (have {sorted(AVAILABLE)})")
    previous = kernels.NAME
    kernels = AVAILABLE[name]
    return previous


def current():
    return kernels.NAME
