"""Backend dispatch for the Pieri enumeration kernel.

The compiled Cython kernel is used when built; otherwise the pure-Python
reference takes over.  Force a backend with ISOSCHUB_KERNEL=c or
ISOSCHUB_KERNEL=python.  The witnessed variant (full box data) is always
served by the reference implementation.
"""

import os

from . import reference

pieri_targets_witnessed = reference.pieri_targets_witnessed

_requested = os.environ.get("ISOSCHUB_KERNEL", "").strip().lower()
_compiled = None
if _requested != "python":
    try:
        from . import _speedups as _compiled
    except ImportError:
        if _requested == "c":
            raise ImportError(
                "ISOSCHUB_KERNEL=c requested but the compiled kernel is not built"
            ) from None

BACKEND = "python" if _compiled is None else "c"

if _compiled is None:
    pieri_targets = reference.pieri_targets
else:
    # the compiled kernel uses fixed-size buffers; huge inputs fall back
    _MAX_ROWS = _compiled.MAX_ROWS
    _MAX_BOXES = _compiled.MAX_BOXES

    def pieri_targets(lam, p, k, row_bound=-1, col_bound=-1):
        if len(lam) + 1 >= _MAX_ROWS or p + len(lam) >= _MAX_BOXES:
            return reference.pieri_targets(lam, p, k, row_bound, col_bound)
        return _compiled.pieri_targets(lam, p, k, row_bound, col_bound)
