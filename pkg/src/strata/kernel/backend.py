"""Select the elimination backend at import time.

The compiled twin is preferred when importable; STRATA_BACKEND=py forces the
pure-Python kernels, STRATA_BACKEND=cy demands the compiled ones (and fails
loudly if they were never built).
"""

import os

from . import _elim_py

_choice = os.environ.get("STRATA_BACKEND", "").strip().lower()

if _choice in ("py", "pure", "python"):
    _impl = _elim_py
    BACKEND = "python"
elif _choice in ("cy", "c", "compiled"):
    from . import _elim_cy as _impl  # type: ignore[no-redef]

    BACKEND = "compiled"
else:
    try:
        from . import _elim_cy as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _elim_py
        BACKEND = "python"

echelon_int = _impl.echelon_int
echelon_mod = _impl.echelon_mod


def backend_name() -> str:
    return BACKEND
