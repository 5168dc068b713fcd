"""Exhaustive matching-theory checks for minimal k-factor-critical graphs.

The hot loops (blossom matching, subset scans, canonical labelling, minor
search) live in a compiled extension; a pure-Python copy is used when the
extension is missing or ``FACTORCRIT_PURE_PYTHON=1`` is set. See
``factorcrit.kernels.BACKEND``.
"""

from .criticality import (
    find_deficiency_structure,
    is_k_factor_critical,
    is_minimal_kfc,
)
from .errors import CapabilityError, ContractViolation, Graph6Error, GraphError
from .graph import Graph, min_degree
from .graph6 import decode, encode
from .kernels import BACKEND
from .matching import find_barrier, has_perfect_matching, max_matching
from .planarity import check_planarity, is_planar

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Graph",
    "GraphError",
    "Graph6Error",
    "CapabilityError",
    "ContractViolation",
    "decode",
    "encode",
    "min_degree",
    "max_matching",
    "has_perfect_matching",
    "find_barrier",
    "is_k_factor_critical",
    "is_minimal_kfc",
    "find_deficiency_structure",
    "check_planarity",
    "is_planar",
]
