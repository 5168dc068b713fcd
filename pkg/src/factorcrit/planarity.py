"""Planarity through Kuratowski minors.

A graph is planar iff it has neither a K5 nor a K3,3 minor, so the decision
here is a minor search that also hands back the branch sets when the graph
is not planar. ``has_minor_by_contraction`` is a second, deliberately naive
decision procedure (vertex deletions and edge contractions) used only to
cross-check the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from . import kernels
from .errors import CapabilityError, GraphError
from .graph import Graph, induced_components, mask_of, members, min_degree

__all__ = [
    "K5",
    "K33",
    "MINOR_LIMIT",
    "MinorEmbedding",
    "target_edges",
    "find_minor",
    "check_planarity",
    "is_planar",
    "verify_minor_embedding",
    "is_bipartite",
    "check_planar_min_degree",
    "check_bipartite_planar_bound",
    "has_minor_by_contraction",
    "is_planar_by_contraction",
]

K5 = "K5"
K33 = "K33"
MINOR_LIMIT = 12

_TARGET_EDGES = {
    K5: tuple(combinations(range(5), 2)),
    K33: tuple((i, j) for i in range(3) for j in range(3, 6)),
}
_TARGET_ORDER = {K5: 5, K33: 6}


def target_edges(target: str) -> tuple[tuple[int, int], ...]:
    """Edges of the target graph. For K3,3 the sides are {0,1,2} and {3,4,5}."""
    try:
        return _TARGET_EDGES[target]
    except KeyError:
        raise GraphError(f"unknown minor target {target!r}; use 'K5' or 'K33'") from None


@dataclass(frozen=True)
class MinorEmbedding:
    """Branch sets of a minor model: ``branch_sets[x]`` realises target vertex ``x``."""

    target: str
    branch_sets: tuple[frozenset[int], ...]

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "branch_sets": {str(x): sorted(b) for x, b in enumerate(self.branch_sets)},
        }


def verify_minor_embedding(g: Graph, emb: MinorEmbedding) -> bool:
    edges = target_edges(emb.target)
    if len(emb.branch_sets) != _TARGET_ORDER[emb.target]:
        return False
    sets = [g.vertex_set(b) for b in emb.branch_sets]
    used: set[int] = set()
    for b in sets:
        if not b or used & b:
            return False
        used |= b
        if induced_components(g, b).count != 1:
            return False
    for x, y in edges:
        if not any(g.adj[v] & sets[y] for v in sets[x]):
            return False
    return True


def _reduce(g: Graph) -> tuple[list[int], list[frozenset[int]]]:
    """Strip vertices of degree <= 1 and suppress vertices of degree 2.

    Both operations preserve K5 and K3,3 minors (the targets have minimum
    degree 3). Returns the reduced bitmask graph and, per reduced vertex,
    the original vertices merged into it.
    """
    nbrs = {v: set(g.adj[v]) for v in range(g.n)}
    groups = {v: {v} for v in range(g.n)}
    while True:
        v = next((x for x in sorted(nbrs) if len(nbrs[x]) <= 2), None)
        if v is None:
            break
        around = sorted(nbrs.pop(v))
        merged = groups.pop(v)
        for w in around:
            nbrs[w].discard(v)
        if len(around) == 2:
            a, b = around
            groups[a] |= merged
            nbrs[a].add(b)
            nbrs[b].add(a)
    keep = sorted(nbrs)
    index = {v: i for i, v in enumerate(keep)}
    masks = [mask_of(index[w] for w in nbrs[v]) for v in keep]
    return masks, [frozenset(groups[v]) for v in keep]


def find_minor(g: Graph, target: str) -> MinorEmbedding | None:
    """A K5 or K3,3 minor model of ``g``, or ``None``.

    Branch sets are searched over set partitions of the reduced graph, with
    pruning on connectivity, and mapped back to original vertices.
    """
    target_edges(target)
    if g.n > MINOR_LIMIT:
        raise CapabilityError(f"minor search limited to n <= {MINOR_LIMIT}")
    masks, groups = _reduce(g)
    t = _TARGET_ORDER[target]
    if len(masks) < t:
        return None
    blocks = kernels.find_minor_blocks(len(masks), masks, t)
    if blocks is None:
        return None
    branch = tuple(
        frozenset().union(*(groups[i] for i in members(b))) for b in blocks
    )
    return MinorEmbedding(target, branch)


def check_planarity(g: Graph) -> tuple[bool, MinorEmbedding | None]:
    """``(True, None)`` if planar, else ``(False, certificate)``."""
    for target in (K5, K33):
        emb = find_minor(g, target)
        if emb is not None:
            return False, emb
    return True, None


def is_planar(g: Graph) -> bool:
    return check_planarity(g)[0]


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def check_planar_min_degree(g: Graph) -> bool:
    """Every planar graph has a vertex of degree at most 5."""
    if g.n == 0:
        return True
    return min_degree(g) <= 5 or not is_planar(g)


def check_bipartite_planar_bound(g: Graph) -> bool:
    """A bipartite planar graph on n >= 3 vertices has at most 2n - 4 edges."""
    if g.n < 3 or not is_bipartite(g) or not is_planar(g):
        return True
    return g.m <= 2 * g.n - 4


# -- independent oracle ---------------------------------------------------------


def _edge_count(masks: list[int]) -> int:
    return sum(bin(m).count("1") for m in masks) // 2


def _contains_spanning(masks: list[int], edges: tuple[tuple[int, int], ...], order: int) -> bool:
    for p in permutations(range(order)):
        if all((masks[p[x]] >> p[y]) & 1 for x, y in edges):
            return True
    return False


@lru_cache(maxsize=None)
def _minor_closure(n: int, code: int, target: str) -> bool:
    from .enumeration import _masks_from_code

    order = _TARGET_ORDER[target]
    edges = _TARGET_EDGES[target]
    masks = _masks_from_code(n, code)
    if n < order or _edge_count(masks) < len(edges):
        return False
    if n == order:
        return _contains_spanning(masks, edges, order)
    for v in range(n):
        child = [(m & ((1 << v) - 1)) | ((m >> (v + 1)) << v) for i, m in enumerate(masks) if i != v]
        if _minor_closure(n - 1, kernels.canonical_code(n - 1, child), target):
            return True
    for u in range(n):
        for v in members(masks[u]):
            if v < u:
                continue
            merged = (masks[u] | masks[v]) & ~((1 << u) | (1 << v))
            contracted = list(masks)
            contracted[u] = merged
            for w in members(masks[v]):
                if w != u:
                    contracted[w] |= 1 << u
            child = [
                (m & ((1 << v) - 1)) | ((m >> (v + 1)) << v)
                for i, m in enumerate(contracted)
                if i != v
            ]
            if _minor_closure(n - 1, kernels.canonical_code(n - 1, child), target):
                return True
    return False


def has_minor_by_contraction(g: Graph, target: str) -> bool:
    """Decide minor containment by recursive vertex deletion and edge contraction."""
    target_edges(target)
    if g.n > 9:
        raise CapabilityError("contraction oracle limited to n <= 9")
    return _minor_closure(g.n, kernels.canonical_code(g.n, g.masks), target)


def is_planar_by_contraction(g: Graph) -> bool:
    return not (has_minor_by_contraction(g, K5) or has_minor_by_contraction(g, K33))
