"""Selects the compiled kernels when available, else the pure-Python ones.

Set ``SLPLETHYSM_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("SLPLETHYSM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py

lr_count = _impl.lr_count
ad_images = _impl.ad_images
sparse_rank = _impl.sparse_rank

__all__ = ["BACKEND", "lr_count", "ad_images", "sparse_rank"]
