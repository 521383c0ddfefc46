"""Kernel selection: compiled extension when available, pure Python otherwise.

Set BEYONDPLANAR_PURE=1 to force the pure implementation (used by the
parity tests and the benchmark).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("BEYONDPLANAR_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION: str = _impl.IMPLEMENTATION
max_clique = _impl.max_clique
max_conflict_bounded_set = _impl.max_conflict_bounded_set
