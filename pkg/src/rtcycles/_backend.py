"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``RTCYCLES_PURE=1`` to force the fallback.
"""

import os

if os.environ.get("RTCYCLES_PURE"):
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:  # extension not built
        from . import _pykernels as kernels

BACKEND = "cython" if kernels.__name__.endswith("_ckernels") else "python"

__all__ = ["kernels", "BACKEND"]
