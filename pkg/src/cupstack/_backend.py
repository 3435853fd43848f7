"""Kernel backend selection.

Prefers the compiled cupstack._speedups extension and falls back to the
pure-Python kernels.  CUPSTACK_BACKEND=py (or =c) forces a choice; forcing
the compiled backend when it is not built is an import-time error.
"""

from __future__ import annotations

import os

from . import _kernel_py
from .config import ENV_BACKEND

_forced = os.environ.get(ENV_BACKEND, "").strip().lower()

if _forced in ("py", "python"):
    kernel = _kernel_py
elif _forced in ("c", "compiled", "speedups"):
    from . import _speedups as kernel  # noqa: F401
elif _forced in ("", "auto"):
    try:
        from . import _speedups as kernel  # noqa: F401
    except ImportError:
        kernel = _kernel_py
else:
    raise ImportError(f"unrecognized {ENV_BACKEND} value: {_forced!r}")


def backend_name() -> str:
    """Either 'compiled' or 'python'."""
    return kernel.BACKEND_NAME


def compiled_available() -> bool:
    try:
        from . import _speedups  # noqa: F401
    except ImportError:
        return False
    return True
