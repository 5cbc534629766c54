"""Kernel backend selection.

The compiled Cython kernel is preferred; the pure-Python mirror is the
fallback. Set TEMPOC_PURE_PYTHON=1 to force the fallback. Both implement the
same deterministic tie-breaking, so results are bit-identical either way.
"""

import os

from . import _pure

PYTHON_KERNEL = _pure.sssp_csr
try:
    from . import _fast

    COMPILED_KERNEL = _fast.sssp_csr
except ImportError:
    COMPILED_KERNEL = None

if os.environ.get("TEMPOC_PURE_PYTHON") or COMPILED_KERNEL is None:
    ACTIVE_BACKEND = "python"
    sssp_csr = PYTHON_KERNEL
else:
    ACTIVE_BACKEND = "compiled"
    sssp_csr = COMPILED_KERNEL
