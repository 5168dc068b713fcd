"""Vertex/edge connectivity by max-flow and exhaustive vertex-cut search."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

from .errors import GraphError
from .graph import ComponentDecomposition, Graph, induced_components

__all__ = [
    "CutWitness",
    "MinOddCutSelection",
    "max_flow",
    "local_vertex_connectivity",
    "vertex_connectivity",
    "edge_connectivity",
    "is_connected",
    "enumerate_vertex_cuts",
    "smallest_odd_cut_component",
]


@dataclass(frozen=True)
class CutWitness:
    cut_set: frozenset[int]
    separated: ComponentDecomposition


@dataclass(frozen=True)
class MinOddCutSelection:
    cut: frozenset[int]
    odd_component: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.odd_component)


def max_flow(capacity: list[dict[int, int]], source: int, sink: int) -> int:
    """Edmonds-Karp on a residual graph given as per-node capacity dicts.

    ``capacity`` is modified in place into the final residual graph.
    """
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, c in capacity[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            return flow
        bottleneck = None
        y = sink
        while y != source:
            x = parent[y]
            c = capacity[x][y]
            bottleneck = c if bottleneck is None else min(bottleneck, c)
            y = x
        y = sink
        while y != source:
            x = parent[y]
            capacity[x][y] -= bottleneck
            capacity[y][x] = capacity[y].get(x, 0) + bottleneck
            y = x
        flow += bottleneck


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent)."""
    if g.has_edge(s, t) or s == t:
        raise GraphError("local vertex connectivity needs distinct non-adjacent vertices")
    big = g.n
    # vertex v splits into 2v (in) and 2v+1 (out)
    cap: list[dict[int, int]] = [dict() for _ in range(2 * g.n)]
    for v in range(g.n):
        cap[2 * v][2 * v + 1] = big if v in (s, t) else 1
        for w in g.adj[v]:
            cap[2 * v + 1][2 * w] = big
    return max_flow(cap, 2 * s + 1, 2 * t)


def vertex_connectivity(g: Graph) -> int:
    """Fewest vertices whose removal disconnects ``g`` (``n - 1`` for K_n)."""
    best = max(g.n - 1, 0)
    for s, t in combinations(range(g.n), 2):
        if t not in g.adj[s]:
            best = min(best, local_vertex_connectivity(g, s, t))
    return best


def edge_connectivity(g: Graph) -> int:
    if g.n <= 1:
        return 0
    best = None
    for t in range(1, g.n):
        cap = [{w: 1 for w in g.adj[v]} for v in range(g.n)]
        f = max_flow(cap, 0, t)
        best = f if best is None else min(best, f)
    return best


def is_connected(g: Graph) -> bool:
    return induced_components(g).count <= 1


def enumerate_vertex_cuts(g: Graph, size: int) -> Iterator[CutWitness]:
    """Every ``size``-subset whose removal leaves at least two components,
    in lexicographic order."""
    if size < 0 or size > g.n - 2:
        raise GraphError(f"cut size must lie in 0..{g.n - 2}, got {size}")
    everything = frozenset(range(g.n))
    for combo in combinations(range(g.n), size):
        cut = frozenset(combo)
        parts = induced_components(g, everything - cut)
        if parts.count >= 2:
            yield CutWitness(cut, parts)


def smallest_odd_cut_component(g: Graph, cut_size: int) -> MinOddCutSelection | None:
    """Among all vertex cuts of the given size, one separating the smallest
    odd component.

    Ties go to the lexicographically smallest cut, then component. ``None``
    when no cut of that size separates an odd component.
    """
    if cut_size > g.n - 2:
        return None
    best = None
    best_key = None
    for witness in enumerate_vertex_cuts(g, cut_size):
        for comp in witness.separated.odd_components():
            key = (len(comp), sorted(witness.cut_set), sorted(comp))
            if best_key is None or key < best_key:
                best_key = key
                best = MinOddCutSelection(witness.cut_set, comp)
    return best
