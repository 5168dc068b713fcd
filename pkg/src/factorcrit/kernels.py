"""Backend selection for the hot kernels.

The compiled module is used when it was built; otherwise the pure-Python
twin is loaded. Set ``FACTORCRIT_PURE_PYTHON=1`` to force the fallback.
"""

import importlib
import os

__all__ = [
    "BACKEND",
    "load_backend",
    "available_backends",
    "max_matching",
    "outer_vertices",
    "has_perfect_matching",
    "kfc_violation",
    "component_masks",
    "odd_component_count",
    "max_deficiency_set",
    "lex_less",
    "canonical_code",
    "find_minor_blocks",
]

_MODULES = {"cython": "._ckernels", "python": "._pykernels"}


def load_backend(name):
    """Import a specific backend module (``"cython"`` or ``"python"``)."""
    return importlib.import_module(_MODULES[name], __package__)


def available_backends():
    names = []
    for name in _MODULES:
        try:
            load_backend(name)
        except ImportError:
            continue
        names.append(name)
    return names


def _select():
    if os.environ.get("FACTORCRIT_PURE_PYTHON", "") not in ("", "0"):
        return "python", load_backend("python")
    try:
        return "cython", load_backend("cython")
    except ImportError:
        return "python", load_backend("python")


BACKEND, _impl = _select()

max_matching = _impl.max_matching
outer_vertices = _impl.outer_vertices
has_perfect_matching = _impl.has_perfect_matching
kfc_violation = _impl.kfc_violation
component_masks = _impl.component_masks
odd_component_count = _impl.odd_component_count
max_deficiency_set = _impl.max_deficiency_set
lex_less = _impl.lex_less
canonical_code = _impl.canonical_code
find_minor_blocks = _impl.find_minor_blocks
