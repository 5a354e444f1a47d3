"""Select the compiled core when available, else the pure-Python one.

Set ``THERMOGRAV_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pycore

if os.environ.get("THERMOGRAV_PURE_PYTHON", "") not in ("", "0"):
    core = _pycore
else:
    try:
        from . import _core as core
    except ImportError:
        core = _pycore

BACKEND = core.BACKEND

__all__ = ["BACKEND", "core"]
