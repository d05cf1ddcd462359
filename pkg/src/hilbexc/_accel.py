"""Select the compiled kernels when built, else the pure-Python ones.

Set ``HILBEXC_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("HILBEXC_PURE_PYTHON") == "1":
    kernels = _kernels_py
    COMPILED = False
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        COMPILED = True
    except ImportError:
        kernels = _kernels_py
        COMPILED = False

signed_fixed_trace = kernels.signed_fixed_trace

__all__ = ["COMPILED", "kernels", "signed_fixed_trace"]
