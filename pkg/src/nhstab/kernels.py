"""Select the compiled kernels when available, else the pure-Python ones.

Set ``NHSTAB_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if not os.environ.get("NHSTAB_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "compiled"

reflect_to_dominant = _impl.reflect_to_dominant
orbit = _impl.orbit
orbit_project = _impl.orbit_project
alternating_accumulate = _impl.alternating_accumulate
freudenthal = _impl.freudenthal


def use_backend(name: str):
    """Switch backends at runtime (benchmarks and tests)."""
    global BACKEND, reflect_to_dominant, orbit, orbit_project, alternating_accumulate, freudenthal
    if name == "python":
        impl = _kernels_py
    elif name == "compiled":
        from . import _kernels as impl  # type: ignore[attr-defined,no-redef]
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name
    reflect_to_dominant = impl.reflect_to_dominant
    orbit = impl.orbit
    orbit_project = impl.orbit_project
    alternating_accumulate = impl.alternating_accumulate
    freudenthal = impl.freudenthal
