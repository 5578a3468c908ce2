"""Kernel selection: compiled extension if built, pure Python otherwise.

Set the environment variable ``DESSINS_PURE=1`` before import to force the
pure backend (used by the benchmark and by CI runs without a compiler).
"""

import os

if os.environ.get("DESSINS_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND

compose = _impl.compose
inverse = _impl.inverse
pair_is_transitive = _impl.pair_is_transitive
centralizer_pair = _impl.centralizer_pair
canonical_pair = _impl.canonical_pair


def using_speedups():
    return BACKEND == "cython"
