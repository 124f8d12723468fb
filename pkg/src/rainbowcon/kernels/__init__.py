"""Kernel backend selection.

Imports the compiled ``_speedups`` extension when present, falling back to
the pure-Python reference implementation.  ``RAINBOWCON_PURE=1`` forces the
fallback (useful for benchmarking and cross-validation).
Both backends export the same five functions with identical contracts and
deterministic, identical outputs.
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("RAINBOWCON_PURE"):
    _impl = pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND_NAME: str = _impl.BACKEND_NAME

rainbow_path_dp = _impl.rainbow_path_dp
rainbow_path_dfs = _impl.rainbow_path_dfs
rainbow_reach_dp = _impl.rainbow_reach_dp
rainbow_reach_dfs = _impl.rainbow_reach_dfs
search_coloring = _impl.search_coloring
