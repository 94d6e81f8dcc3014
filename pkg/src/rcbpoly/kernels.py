"""Kernel backend selection.

The compiled module is used when it imports; setting ``RCB_PURE_PYTHON=1``
forces the pure-Python fallback.  Both expose the same functions.
"""

from __future__ import annotations

import os

from . import _pykernels

_FORCE_PURE = os.environ.get("RCB_PURE_PYTHON", "").strip() not in ("", "0")

if _FORCE_PURE:
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND: str = _impl.BACKEND

trim = _impl.trim
padd = _impl.padd
psub = _impl.psub
pneg = _impl.pneg
pscale = _impl.pscale
pmul = _impl.pmul
pdivmod = _impl.pdivmod
peval = _impl.peval
smul = _impl.smul
sdiv = _impl.sdiv
scompose = _impl.scompose
srevert = _impl.srevert
ssqrt = _impl.ssqrt
det_bareiss = _impl.det_bareiss


def available_backends() -> dict:
    """Map backend name to kernel module for every backend that imports."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
