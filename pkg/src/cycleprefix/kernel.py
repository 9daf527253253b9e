"""Kernel backend selection.

Prefers the compiled ``_speedups`` extension and falls back to the pure
``_pykernel`` twin when the extension is missing (or when the environment
variable ``CYCLEPREFIX_PURE`` is set to a non-zero value).
"""

from __future__ import annotations

import os

from . import _pykernel

if os.environ.get("CYCLEPREFIX_PURE", "0").strip() in ("", "0"):
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pykernel
else:
    _impl = _pykernel

BACKEND_NAME: str = _impl.BACKEND_NAME
distances = _impl.distances
eccentricity_range = _impl.eccentricity_range
successors = _impl.successors
predecessors = _impl.predecessors
