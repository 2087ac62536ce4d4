"""Backend selection for the bitmask kernels.

The compiled ``_kernels`` extension is used when it imports; otherwise the
numpy implementation in ``_kernels_py``.  Set ``SEMIREP_PURE_PYTHON=1`` to
force the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py


def _load_compiled() -> ModuleType | None:
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels


_compiled = _load_compiled()
_FORCE_PY = os.environ.get("SEMIREP_PURE_PYTHON", "").strip() not in ("", "0")

_impl: ModuleType = _kernels_py if (_FORCE_PY or _compiled is None) else _compiled
BACKEND = "python" if _impl is _kernels_py else "compiled"

join_closure = _impl.join_closure
leq_matrix = _impl.leq_matrix
join_irreducible_flags = _impl.join_irreducible_flags
meet_irreducible_flags = _impl.meet_irreducible_flags
permute_bits = _impl.permute_bits
fixed_patterns = _impl.fixed_patterns


def available_backends() -> dict[str, ModuleType]:
    out = {"python": _kernels_py}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out
