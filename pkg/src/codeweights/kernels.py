"""Kernel backend selection.

The compiled extension is used when it was built; setting the environment
variable ``CODEWEIGHTS_PURE=1`` forces the numpy fallback.
"""

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None


def available_backends():
    return ["cython", "python"] if _compiled is not None else ["python"]


def get_backend(name=None):
    if name is None:
        name = "python" if os.environ.get("CODEWEIGHTS_PURE") or _compiled is None else "cython"
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernel not built; run `pip install -e .`")
        return _compiled
    if name == "python":
        return _kernels_py
    raise ValueError(f"unknown backend {name!r}")


backend = get_backend()
BACKEND = backend.BACKEND
