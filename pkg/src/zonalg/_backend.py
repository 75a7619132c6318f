"""Selects the compiled kernel extension when present, numpy otherwise.

Set ZONALG_PURE=1 to force the pure-python backend (used by the benchmark
and the backend-equivalence tests).
"""

import os

from . import _kernels_py

if os.environ.get("ZONALG_PURE"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

pair_sin_sum = _impl.pair_sin_sum
support_batch = _impl.support_batch
