"""Backend selection for the hot loops.

The compiled extension is used when importable; set
``MULTICHAINS_PURE_PYTHON=1`` to force the pure-Python implementation.
"""
import os

from . import _pykernels

BACKEND = "python"
if os.environ.get("MULTICHAINS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

relation_matrix = _impl.relation_matrix
check_axioms = _impl.check_axioms

__all__ = ["BACKEND", "relation_matrix", "check_axioms"]
