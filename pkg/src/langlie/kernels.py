"""Backend selection for the path-simulation kernels.

Prefers the compiled extension and falls back to the pure-Python mirror
when it is absent; ``LANGLIE_FORCE_PURE=1`` forces the fallback.  Both
backends produce bit-identical paths from identical uniforms (see
``benchmarks/bench_kernels.py`` for the speed comparison).
"""

from __future__ import annotations

import os

from . import _pure
from .errors import ValidationError

if os.environ.get("LANGLIE_FORCE_PURE") == "1":
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pure
        BACKEND = "pure"

PROBIT = _pure.PROBIT
LOGISTIC = _pure.LOGISTIC

langlie_path = _impl.langlie_path
rm_path = _impl.rm_path
reflected_walk_path = _impl.reflected_walk_path
coupled_langlie_pair = _impl.coupled_langlie_pair

_CODES = {"probit": PROBIT, "logistic": LOGISTIC}


def family_code(family: str) -> int:
    try:
        return _CODES[family]
    except KeyError:
        raise ValidationError(f"unknown family {family!r}") from None


def get_backend(name: str):
    """Return a specific backend module ('cython' or 'pure'); for tests and benchmarks."""
    if name == "pure":
        return _pure
    if name == "cython":
        from . import _kernels
        return _kernels
    raise ValidationError(f"unknown backend {name!r}")
