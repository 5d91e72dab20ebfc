"""Kernel dispatch: compiled extension if importable, pure Python otherwise.

Set KNOTLAB_PURE_KERNELS=1 to force the pure implementations (used by
the benchmark and the kernel parity tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

backend = "pure"
canonical_quads = _kernels_py.canonical_quads
state_loop_counts = _kernels_py.state_loop_counts

if not os.environ.get("KNOTLAB_PURE_KERNELS"):
    try:
        from . import _kernels_c  # compiled at install time; optional

        backend = "compiled"
        canonical_quads = _kernels_c.canonical_quads
        state_loop_counts = _kernels_c.state_loop_counts
    except ImportError:
        pass
