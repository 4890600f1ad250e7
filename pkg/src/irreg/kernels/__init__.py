"""Hot search loops, compiled when possible.

The Cython extension is used if it imported cleanly; set
``IRREG_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _pykernels

FOUND = _pykernels.FOUND
EXHAUSTED = _pykernels.EXHAUSTED
TIMEOUT = _pykernels.TIMEOUT

_impl = _pykernels
if os.environ.get("IRREG_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND
vertex_search = _impl.vertex_search
edge_search = _impl.edge_search
diseq_search = _impl.diseq_search


def backends():
    """All importable kernel modules keyed by name (for tests and benchmarks)."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
