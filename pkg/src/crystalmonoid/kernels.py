"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``CRYSTALMONOID_PURE=1`` in the environment to force the fallback.
"""

import os

from . import _kernels as pure

BACKEND = "python"

if os.environ.get("CRYSTALMONOID_PURE", "") not in ("", "0"):
    impl = pure
else:
    try:
        from . import _speedups as impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        impl = pure

bracket = impl.bracket
rewrite_leftmost = impl.rewrite_leftmost

__all__ = ["BACKEND", "bracket", "rewrite_leftmost", "pure", "impl"]
