"""Backend selection for the hot kernels.

At import time the compiled extension (``pgonal._speedups``) is preferred;
the pure numpy module ``pgonal._kernels_py`` is the drop-in fallback.  Both
expose ``lookup_rows``, ``mul_table`` and ``convolve`` with identical
semantics, and ``tests/test_kernels.py`` asserts they agree.  Benchmarks
and tests can pin a backend explicitly via :func:`get_backend`.
"""

from __future__ import annotations

from types import ModuleType

from . import _kernels_py

try:
    from . import _speedups  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build
    _speedups = None

_active = _speedups if _speedups is not None else _kernels_py


def active_backend() -> ModuleType:
    return _active


def active_backend_name() -> str:
    return _active.BACKEND_NAME


def available_backends() -> list[str]:
    names = ["pure"]
    if _speedups is not None:
        names.insert(0, "compiled")
    return names


def get_backend(name: str) -> ModuleType:
    if name == "pure":
        return _kernels_py
    if name == "compiled":
        if _speedups is None:
            raise ValueError("compiled backend is not available in this build")
        return _speedups
    raise ValueError(f"unknown backend {name!r}")


def lookup_rows(elements, rows):
    return _active.lookup_rows(elements, rows)


def mul_table(elements):
    return _active.mul_table(elements)


def convolve(elements, table, idx_a, num_a, idx_b, num_b):
    return _active.convolve(elements, table, idx_a, num_a, idx_b, num_b)
