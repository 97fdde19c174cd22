"""Kernel backend selection.

The compiled Cython kernels are used when the extension module built, with
the pure-Python implementations as fallback.  Set RINGLAT_KERNELS=python or
RINGLAT_KERNELS=c to force a backend (the latter raises if the extension is
missing rather than silently degrading).
"""

import os

from ringlat._kernels import _pure

_FORCED = os.environ.get("RINGLAT_KERNELS", "auto").strip().lower()

if _FORCED in ("python", "py", "pure"):
    _impl = _pure
elif _FORCED in ("auto", "", "c"):
    try:
        from ringlat._kernels import _speedups as _impl
    except ImportError:
        if _FORCED == "c":
            raise
        _impl = _pure
else:
    raise ValueError(f"unknown RINGLAT_KERNELS value: {_FORCED!r}")

BACKEND = _impl.BACKEND_NAME

xgcd = _impl.xgcd
ext_gcd_normalized = _impl.ext_gcd_normalized
matmul = _impl.matmul
ihnf_transform = _impl.ihnf_transform
hnf_transform = _impl.hnf_transform
det_bareiss = _impl.det_bareiss
snf_transform = _impl.snf_transform
massager_check = _impl.massager_check


def available_backends():
    """Names of importable kernel backends (for tests and benchmarks)."""
    names = ["python"]
    try:
        from ringlat._kernels import _speedups  # noqa: F401
    except ImportError:
        pass
    else:
        names.append("c")
    return names


def get_backend(name):
    """Return the kernel module for an explicit backend name."""
    if name == "python":
        return _pure
    if name == "c":
        from ringlat._kernels import _speedups

        return _speedups
    raise ValueError(f"unknown backend: {name!r}")
