"""Optional numba acceleration.

Set ``ARITHSETS_DISABLE_JIT=1`` to force the pure numpy/Python code paths.
"""

import os

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAS_NUMBA = False

JIT_ENABLED = HAS_NUMBA and os.environ.get("ARITHSETS_DISABLE_JIT", "") in ("", "0")

BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    return "numba" if JIT_ENABLED else "numpy"


def resolve_backend(backend: str | None) -> str:
    if backend is None:
        return default_backend()
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}, expected one of {BACKENDS}")
    if backend == "numba" and not HAS_NUMBA:
        raise RuntimeError("numba is not installed")
    return backend


def njit(*args, **kwargs):
    """``numba.njit`` when available, identity decorator otherwise."""
    if HAS_NUMBA:
        kwargs.setdefault("cache", True)
        return numba.njit(*args, **kwargs)
    if args and callable(args[0]):
        return args[0]
    return lambda f: f
