"""Kernel backend selection.

Imports the compiled extension when it is available, otherwise falls back to
the pure-Python twins.  Set FROZONE_PURE=1 to force the pure backend (used by
the benchmark and the parity tests).  Both backends compute bit-identical
results; the choice only affects speed.
"""

import os

from . import pure as _pure

if os.environ.get("FROZONE_PURE"):
    _impl = _pure
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND
TOL = _impl.TOL
ray_gap = _impl.ray_gap
zone_gap = _impl.zone_gap
sweep_deviation = _impl.sweep_deviation
dwa_best = _impl.dwa_best
