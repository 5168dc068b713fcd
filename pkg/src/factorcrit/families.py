"""Named small graphs used in examples, tests and the CLI."""

from __future__ import annotations

from itertools import combinations

from .errors import GraphError
from .graph import Graph

__all__ = [
    "complete",
    "cycle",
    "path",
    "star",
    "empty",
    "complete_bipartite",
    "petersen",
    "cube",
    "icosahedron",
    "pentagonal_bipyramid",
    "NAMED",
    "by_name",
]


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph.from_edges(n, ())


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def cube() -> Graph:
    return Graph.from_edges(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)])


def icosahedron() -> Graph:
    # apex 0, upper ring 1..5, lower ring 6..10, apex 11
    edges = []
    for i in range(5):
        a, b = 1 + i, 1 + (i + 1) % 5
        c, d = 6 + i, 6 + (i + 1) % 5
        edges += [(0, a), (a, b), (c, d), (11, c), (a, c), (b, c)]
    return Graph.from_edges(12, edges)


def pentagonal_bipyramid() -> Graph:
    """Equator ``0..4`` (a 5-cycle), apexes ``5`` and ``6``."""
    equator = [(i, (i + 1) % 5) for i in range(5)]
    return Graph.from_edges(7, equator + [(a, i) for a in (5, 6) for i in range(5)])


NAMED = {
    "K4": lambda: complete(4),
    "K5": lambda: complete(5),
    "K6": lambda: complete(6),
    "K33": lambda: complete_bipartite(3, 3),
    "C5": lambda: cycle(5),
    "C6": lambda: cycle(6),
    "petersen": petersen,
    "cube": cube,
    "icosahedron": icosahedron,
    "bipyramid": pentagonal_bipyramid,
}


def by_name(name: str) -> Graph:
    try:
        return NAMED[name]()
    except KeyError:
        raise GraphError(f"unknown graph name {name!r}") from None
