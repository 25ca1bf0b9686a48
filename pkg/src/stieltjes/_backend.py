"""Select the compiled kernels when available, else the pure-Python twin.

Set ``STIELTJES_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

FORCE_PURE_ENV = "STIELTJES_PURE_PYTHON"

if os.environ.get(FORCE_PURE_ENV, "") not in ("", "0"):
    kernels = _kernels_py
else:
    try:
        from . import _kernels_cy as kernels
    except ImportError:
        kernels = _kernels_py

BACKEND = kernels.BACKEND
