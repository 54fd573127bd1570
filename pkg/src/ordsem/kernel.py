"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``ORDSEM_PURE_KERNEL=1`` to force the pure fallback (used by the
benchmark and the parity tests).
"""

from __future__ import annotations

import os

if os.environ.get("ORDSEM_PURE_KERNEL"):
    from . import _pykernel as _impl
else:
    try:
        from . import _ckernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernel as _impl

IMPLEMENTATION: str = _impl.IMPLEMENTATION
KERNEL_MAX_N: int = _impl.KERNEL_MAX_N

assoc_tables = _impl.assoc_tables
compatible_orders = _impl.compatible_orders
sample_tables = _impl.sample_tables
