"""Select the compiled elimination kernel when available.

Set ``GORLAB_PURE_PYTHON=1`` to force the numpy fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
rref_modp = _kernels_py.rref_modp

if os.environ.get("GORLAB_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._kernels import rref_modp  # noqa: F811
        BACKEND = "cython"
    except ImportError:  # extension not built
        pass
