"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the pure-Python
module takes over. ``use_backend`` switches explicitly (tests and the
benchmark run both).
"""
from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels

_active: ModuleType = BACKENDS.get("compiled", _pykernels)


def backend() -> str:
    return "compiled" if _active is _ckernels and _ckernels is not None else "python"


def use_backend(name: str) -> None:
    global _active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    _active = BACKENDS[name]


def is_simple(values) -> bool:
    return _active.is_simple(values)


def contains_pattern(values, pattern) -> bool:
    return _active.contains_pattern(values, pattern)


def avoids_321(values) -> bool:
    return _active.avoids_321(values)


def crossing_counts(values) -> list[int]:
    return _active.crossing_counts(values)
