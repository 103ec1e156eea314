"""Kernel backend selection.

The compiled extension is used when it imports; otherwise, or when
``CYCLEBOUND_PURE_PYTHON`` is set, the pure-Python kernels are used.  Both
expose ``st_paths``, ``cycles`` and ``permanent`` with identical results.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("CYCLEBOUND_PURE_PYTHON"):
        raise ImportError("pure-Python kernels requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _pykernels

# exact results must stay below 2**128 to use the compiled path
_U128_BITS = 127


def available_backends() -> dict:
    out = {"python": _pykernels}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def st_paths(indptr, nbrs, mults, s: int, t: int, total_mult: int) -> int:
    impl = _impl if total_mult <= _U128_BITS else _pykernels
    return impl.st_paths(indptr, nbrs, mults, s, t)


def cycles(indptr, nbrs, mults, total_mult: int) -> int:
    impl = _impl if total_mult <= _U128_BITS else _pykernels
    return impl.cycles(indptr, nbrs, mults)


def permanent(rows, n: int) -> int:
    impl = _impl if n <= 30 else _pykernels
    return impl.permanent(rows, n)
