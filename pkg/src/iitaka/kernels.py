"""Kernel selection: the compiled extension if importable, else pure Python.

Set ``IITAKA_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("IITAKA_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pykernels

BACKEND = "compiled" if _impl is not _pykernels else "python"

# the compiled walk keeps its path in a fixed-size buffer
COMPILED_MAX_DEPTH = 256


def walk_baskets(rs, bs, ws, chi, lo, hi, first, max_depth=0):
    impl = _impl
    if max_depth >= COMPILED_MAX_DEPTH:
        impl = _pykernels
    return impl.walk_baskets(rs, bs, ws, chi, lo, hi, first)


def dega_min_grid(b, u, n, m, mp):
    return _impl.dega_min_grid(b, u, n, m, mp)


def backends():
    """Available implementations by name, for tests and benchmarks."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels  # type: ignore[attr-defined]
        out["compiled"] = _ckernels
    except ImportError:
        pass
    return out
