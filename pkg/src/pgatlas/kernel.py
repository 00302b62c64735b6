"""Kernel backend selection: compiled extension if available, numpy
fallback otherwise.  PGATLAS_KERNEL=python forces the fallback."""

from __future__ import annotations

import os

if os.environ.get("PGATLAS_KERNEL", "").lower() == "python":
    from . import _kernel_py as _impl
else:
    try:
        from . import _ckernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND: str = _impl.BACKEND
closure = _impl.closure
