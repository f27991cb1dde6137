"""Pick the compiled kernels when importable, else the pure-Python ones.

Set ``DIVERSE_OPT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

try:
    from . import _kernels_ext
except ImportError:
    _kernels_ext = None

AVAILABLE = {"python": _kernels_py}
if _kernels_ext is not None:
    AVAILABLE["compiled"] = _kernels_ext

if _kernels_ext is not None and os.environ.get("DIVERSE_OPT_PURE_PYTHON") != "1":
    DEFAULT = "compiled"
else:
    DEFAULT = "python"


def kernels(name=None):
    """Return the kernel module for ``name`` (``"compiled"``, ``"python"`` or None)."""
    name = DEFAULT if name is None else name
    try:
        return AVAILABLE[name]
    except KeyError:
        raise ValueError(
            f"kernel backend {name!r} not available (have: {sorted(AVAILABLE)})"
        ) from None
