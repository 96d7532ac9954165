"""Kernel selection.

The compiled ``_ckernels`` module is used when it imports and the graph has
at most 64 edges; otherwise the pure-Python ``_pykernels`` run. Setting
``ACTIVITY_FORGE_BACKEND=python`` forces the fallback.
"""
import os

from . import _pykernels

try:
    if os.environ.get("ACTIVITY_FORGE_BACKEND", "").lower() == "python":
        raise ImportError("compiled kernels disabled by ACTIVITY_FORGE_BACKEND")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def kernels_for(m):
    if _ckernels is not None and m <= _ckernels.MAX_EDGES:
        return _ckernels
    return _pykernels
