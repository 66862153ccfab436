"""Kernel backend selection.

NORMGRAPH_BACKEND=python forces the fallback, =compiled requires the
extension; anything else (or unset) tries the extension first.
"""

from __future__ import annotations

import os

_requested = os.environ.get("NORMGRAPH_BACKEND", "auto").lower()

if _requested == "python":
    from . import _pykernels as kernels

    BACKEND = "python"
elif _requested == "compiled":
    from . import _kernels as kernels  # type: ignore[no-redef]

    BACKEND = "compiled"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernels as kernels

        BACKEND = "python"


def load_backend(name: str):
    """Import a specific backend module (used by parity tests and benchmarks)."""
    if name == "python":
        from . import _pykernels

        return _pykernels
    if name == "compiled":
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list[str]:
    names = []
    try:
        load_backend("compiled")
        names.append("compiled")
    except ImportError:
        pass
    names.append("python")
    return names
