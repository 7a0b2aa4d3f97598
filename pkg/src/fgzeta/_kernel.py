"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting
``FGZETA_PURE_PYTHON=1`` in the environment forces the pure-Python
fallback.  Callers should late-bind through this module
(``_kernel.mul_terms(...)``) so the backend can be swapped in benchmarks
and tests.
"""

import os

from . import _kernel_py

if os.environ.get("FGZETA_PURE_PYTHON"):
    _impl = _kernel_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

BACKEND: str = _impl.BACKEND
mul_terms = _impl.mul_terms


def available_backends() -> dict:
    """Map backend name to its module, for benchmarks and tests."""
    backends = {"python": _kernel_py}
    try:
        from . import _speedups
        backends["cython"] = _speedups
    except ImportError:
        pass
    return backends
