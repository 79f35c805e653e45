"""Backend selection for the set kernels.

The compiled backend is used for frameworks with at most 64 vertices when the
extension module is importable; otherwise the pure-Python kernel is used.
Setting ``PREFEXT_PURE_PYTHON=1`` forces the fallback everywhere.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from typing import Sequence

from ._kernel_py import PyKernel

try:
    from ._ckernel import CKernel
except ImportError:  # extension not built
    CKernel = None

FORCE_PURE = os.environ.get("PREFEXT_PURE_PYTHON", "") not in ("", "0")
C_MAX_VERTICES = 64


def available_backends() -> list[str]:
    names = ["python"]
    if CKernel is not None:
        names.append("cython")
    return names


def default_backend() -> str:
    return "python" if FORCE_PURE or CKernel is None else "cython"


_override: str | None = None


def active_backend() -> str:
    return _override or default_backend()


@contextmanager
def use_backend(name: str):
    """Temporarily route every framework through the named backend."""
    global _override
    if name not in available_backends():
        raise ValueError(f"backend {name!r} is not available")
    prev, _override = _override, name
    try:
        yield
    finally:
        _override = prev


def make_kernel(out_masks: Sequence[int], in_masks: Sequence[int], backend: str | None = None):
    backend = backend or active_backend()
    if backend == "cython":
        if CKernel is None:
            raise ImportError("compiled kernel is not available")
        if len(out_masks) <= C_MAX_VERTICES:
            return CKernel(out_masks, in_masks)
        return PyKernel(out_masks, in_masks)
    if backend == "python":
        return PyKernel(out_masks, in_masks)
    raise ValueError(f"unknown kernel backend {backend!r}")
