"""Kernel backend selection.

The compiled Cython backend is used when its extension module is importable
and the lattice fits in 64-bit element bitmasks; otherwise the pure-Python
backend takes over.  Set LATFAC_PURE=1 to force the pure backend.
"""

from __future__ import annotations

import os

from .pure import PureKernel

try:  # pragma: no cover - exercised indirectly via backend tests
    from . import _core

    _HAVE_COMPILED = True
except ImportError:  # pragma: no cover
    _core = None
    _HAVE_COMPILED = False

FORCE_PURE_ENV = "LATFAC_PURE"


def compiled_available() -> bool:
    return _HAVE_COMPILED and not os.environ.get(FORCE_PURE_ENV)


def available_backends(n: int = 0) -> tuple[str, ...]:
    if compiled_available() and n <= 64:
        return ("compiled", "pure")
    return ("pure",)


def default_backend(n: int = 0) -> str:
    return available_backends(n)[0]


def make_kernel(
    n: int,
    down_strict: list[int],
    up_strict: list[int],
    meet_flat: list[int],
    pair_src: list[int],
    pair_dst: list[int],
    backend: str | None = None,
):
    if backend is None:
        backend = default_backend(n)
    if backend == "compiled":
        if not _HAVE_COMPILED:
            raise ValueError("compiled kernel backend is not available")
        if n > 64:
            raise ValueError("compiled kernel backend supports at most 64 elements")
        return _core.CompiledKernel(
            n, down_strict, up_strict, meet_flat, pair_src, pair_dst
        )
    if backend == "pure":
        return PureKernel(n, down_strict, up_strict, meet_flat, pair_src, pair_dst)
    raise ValueError(f"unknown kernel backend {backend!r}")
