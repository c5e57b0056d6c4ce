"""Kernel selection.

The compiled extension is used when importable; setting the environment
variable ``MIXEDSTIRLING_PURE=1`` forces the pure-Python kernels.
"""

import os

from . import _pure

if os.environ.get("MIXEDSTIRLING_PURE"):
    kernels = _pure
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = _pure

BACKEND = kernels.NAME
