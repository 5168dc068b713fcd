"""Canonical forms and isomorph-free enumeration of small graphs."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from functools import lru_cache

from . import kernels
from .errors import CapabilityError, GraphError
from .graph import Graph
from .graph6 import decode_bits

__all__ = [
    "ENUMERATION_LIMIT",
    "CANONICAL_LIMIT",
    "canonical_code",
    "canonical_form",
    "are_isomorphic",
    "enumerate_graphs",
    "count_graphs",
]

ENUMERATION_LIMIT = 8
CANONICAL_LIMIT = 12


def canonical_code(g: Graph) -> int:
    """Isomorphism invariant that determines ``g`` up to relabelling.

    It is the smallest graph6 bit string over all vertex orderings that list
    vertices by their refined degree colour. Two graphs on the same number of
    vertices are isomorphic iff their codes agree.
    """
    if g.n > CANONICAL_LIMIT:
        raise CapabilityError(f"canonical form limited to n <= {CANONICAL_LIMIT}")
    return kernels.canonical_code(g.n, g.masks)


def canonical_form(g: Graph) -> Graph:
    return decode_bits(g.n, canonical_code(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_code(g) == canonical_code(h)


def _masks_from_code(n: int, code: int) -> list[int]:
    masks = [0] * n
    pos = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if (code >> pos) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            pos -= 1
    return masks


@lru_cache(maxsize=None)
def _codes(n: int) -> tuple[int, ...]:
    if n <= 1:
        return (0,)
    seen = set()
    new = 1 << (n - 1)
    for code in _codes(n - 1):
        parent = _masks_from_code(n - 1, code)
        for attach in range(new):
            masks = [m | new if (attach >> v) & 1 else m for v, m in enumerate(parent)]
            masks.append(attach)
            seen.add(kernels.canonical_code(n, masks))
    return tuple(sorted(seen))


def enumerate_graphs(
    n: int, filter: Callable[[Graph], bool] | None = None
) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices, in canonical form.

    Graphs of order ``n`` are built by attaching a new vertex to every graph
    of order ``n - 1`` in every possible way and keeping one copy per
    canonical code. Output is sorted by code, so it is deterministic.
    For ``n`` beyond 8, read a graph6 stream from an external generator.
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    if n > ENUMERATION_LIMIT:
        raise CapabilityError(
            f"built-in enumeration is limited to n <= {ENUMERATION_LIMIT}; "
            "ingest a graph6 stream (e.g. from nauty's geng) for larger orders"
        )
    if n == 0:
        candidates = [Graph(0, ())]
    else:
        candidates = (decode_bits(n, code) for code in _codes(n))
    for g in candidates:
        if filter is None or filter(g):
            yield g


def count_graphs(n: int) -> int:
    return sum(1 for _ in enumerate_graphs(n))
