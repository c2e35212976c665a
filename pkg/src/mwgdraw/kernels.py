"""Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` twin. Set ``MWG_PURE_PYTHON=1`` to force the
fallback.
"""
import importlib
import os

COORD_LIMIT = 1 << 30

_NAMES = ("blocked_matrix", "mismatch_count", "random_chunk", "anneal_chunk", "grid_scan")


def load(name: str):
    """Return the backend module ``"cython"`` or ``"python"``; ImportError if unavailable."""
    module = {"cython": "mwgdraw._ckernels", "python": "mwgdraw._pykernels"}[name]
    return importlib.import_module(module)


def _select():
    if os.environ.get("MWG_PURE_PYTHON", "") not in ("", "0"):
        return "python", load("python")
    try:
        return "cython", load("cython")
    except ImportError:
        return "python", load("python")


BACKEND, _impl = _select()

blocked_matrix = _impl.blocked_matrix
mismatch_count = _impl.mismatch_count
random_chunk = _impl.random_chunk
anneal_chunk = _impl.anneal_chunk
grid_scan = _impl.grid_scan


def available() -> list[str]:
    out = []
    for name in ("cython", "python"):
        try:
            load(name)
            out.append(name)
        except ImportError:
            pass
    return out
