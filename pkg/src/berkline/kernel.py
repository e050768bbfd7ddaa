"""Hot-kernel selection: compiled extension when available, else pure Python.

Set BERKLINE_PURE=1 in the environment to force the pure backend (used by the
benchmark and by differential tests).
"""

import os

from . import _purekernel

if os.environ.get("BERKLINE_PURE"):
    _impl = _purekernel
    BACKEND = "pure"
else:
    try:
        from . import _convkernel as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built; semantics are identical
        _impl = _purekernel
        BACKEND = "pure"

poly_mul_modp = _impl.poly_mul_modp
pure_poly_mul_modp = _purekernel.poly_mul_modp
