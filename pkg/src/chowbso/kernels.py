"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over. Set ``CHOWBSO_PURE_PYTHON=1`` to force the fallback.
Both backends are exposed as modules for the cross-check tests and the
benchmark.
"""
import os

from . import _kernels_py as python_backend

compiled_backend = None
if not os.environ.get("CHOWBSO_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

_active = compiled_backend or python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

symmetrize_dn = _active.symmetrize_dn
linear_fold_multilinear = _active.linear_fold_multilinear
linear_product = _active.linear_product
