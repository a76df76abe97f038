"""Select the search kernel at import.

The compiled ``_kernel_c`` is used when it was built; otherwise the
pure-Python ``_kernel_py`` takes over.  Setting ``ASCSEQ_PURE_PYTHON=1``
forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("ASCSEQ_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel_c as _impl
    except ImportError:
        _impl = _kernel_py

BACKEND = "cython" if _impl is not _kernel_py else "python"

count_levels = _impl.count_levels
list_level = _impl.list_level


def backends() -> dict:
    """All importable kernels by name (used by the benchmark and tests)."""
    found = {"python": _kernel_py}
    try:
        from . import _kernel_c
    except ImportError:
        pass
    else:
        found["cython"] = _kernel_c
    return found
