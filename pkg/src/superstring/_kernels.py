"""Kernel selection: compiled extension when available, pure Python otherwise.

Set SUPERSTRING_PURE=1 to force the pure backend (used by the benchmark and
by cross-validation tests).
"""

from __future__ import annotations

import os

if os.environ.get("SUPERSTRING_PURE"):
    from . import _pykernels as impl
else:
    try:
        from . import _ckernels as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as impl

BACKEND: str = impl.BACKEND
FLAG_BALANCED: int = 1
FLAG_CONNECTED: int = 2
FLAG_COVERS: int = 4
FLAG_EPSILON: int = 8

solution_flags = impl.solution_flags
ca_inplace = impl.ca_inplace
gha_fill = impl.gha_fill
