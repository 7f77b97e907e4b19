"""Kernel selection: the compiled ``_core`` extension when it imports, else ``_pycore``.

Set ``DOMPOLY_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _pycore

if os.environ.get("DOMPOLY_PURE_PYTHON", "") not in ("", "0"):
    impl = _pycore
    BACKEND = "python"
else:
    try:
        from . import _core as impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        impl = _pycore
        BACKEND = "python"

BACKENDS = {"python": _pycore}
if BACKEND == "compiled":
    BACKENDS["compiled"] = impl


def get(name: str | None = None):
    """Kernel module by name; ``None`` selects the import-time default."""
    if name is None:
        return impl
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
