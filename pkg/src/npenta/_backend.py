"""Selection between the compiled float kernels and the pure Python path.

The compiled extension is picked at import when it built successfully;
setting NPENTA_PURE_PYTHON=1 in the environment forces the fallback.
`set_active` exists so benchmarks and tests can switch explicitly.
"""
import os

try:
    from . import _kernels
except ImportError:  # extension not built on this install
    _kernels = None

HAVE_COMPILED = _kernels is not None


def _default():
    if os.environ.get("NPENTA_PURE_PYTHON", "0") not in ("", "0"):
        return "python"
    return "compiled" if HAVE_COMPILED else "python"


_active = _default()


def active() -> str:
    """Name of the backend in use: "compiled" or "python"."""
    return _active


def kernels():
    """The compiled kernel module, or None when the pure path is active."""
    return _kernels if _active == "compiled" else None


def set_active(name: str) -> str:
    """Switch backend; returns the previous name."""
    global _active
    if name not in ("compiled", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and not HAVE_COMPILED:
        raise RuntimeError("compiled kernels are not available in this install")
    previous = _active
    _active = name
    return previous
