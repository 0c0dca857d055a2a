"""Kernel selection.

The compiled extension is used when it imports; setting ``ECCX_PURE_PYTHON=1``
forces the numpy fallback (the benchmark and the backend tests use both).
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _kernels as compiled
except ImportError:
    compiled = None

if compiled is not None and not os.environ.get("ECCX_PURE_PYTHON"):
    active, NAME = compiled, "cython"
else:
    active, NAME = _pykernels, "python"


def kernels(name: str | None = None):
    """Return the kernel module called ``name`` (``"cython"``/``"python"``), default the active one."""
    if name is None:
        return active
    if name == "python":
        return _pykernels
    if name == "cython":
        if compiled is None:
            raise ImportError("eccx._kernels is not built")
        return compiled
    raise ValueError(f"unknown backend {name!r}")
