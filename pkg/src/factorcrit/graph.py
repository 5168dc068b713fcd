"""Simple undirected graphs on dense integer labels.

A :class:`Graph` is immutable. Vertices are ``0 .. n-1`` and every vertex set
used by the rest of the package is a ``frozenset`` of such labels. Internally
each neighbourhood is also kept as an integer bitmask, which is what the
compiled kernels consume.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import GraphError

__all__ = [
    "Graph",
    "ComponentDecomposition",
    "degree",
    "min_degree",
    "neighborhood",
    "delete_vertices",
    "delete_edge",
    "components_of",
    "induced_components",
    "mask_of",
    "members",
]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """A simple graph with vertices ``0 .. n-1``.

    Build one with :meth:`from_edges`; the direct constructor takes the
    per-vertex neighbour sets and validates symmetry and loop-freeness.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        adj = tuple(frozenset(nb) for nb in self.adj)
        if len(adj) != self.n:
            raise GraphError(f"expected {self.n} neighbour sets, got {len(adj)}")
        for v, nb in enumerate(adj):
            for w in nb:
                if not 0 <= w < self.n:
                    raise GraphError(f"neighbour {w} of {v} out of range")
                if w == v:
                    raise GraphError(f"self-loop at {v}")
                if v not in adj[w]:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "masks", tuple(mask_of(nb) for nb in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Graph:
        masks = list(masks)
        return cls(len(masks), tuple(members(m) for m in masks))

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self.adj[u]

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def vertex_set(self, vertices: Iterable[int]) -> frozenset[int]:
        """Validate ``vertices`` against this graph and return them as a frozenset."""
        s = frozenset(vertices)
        for v in s:
            self.check_vertex(v)
        return s

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[frozenset[int], ...]
    odd_count: int

    @property
    def count(self) -> int:
        return len(self.components)

    def odd_components(self) -> tuple[frozenset[int], ...]:
        return tuple(c for c in self.components if len(c) % 2)

    def component_of(self, v: int) -> frozenset[int]:
        for c in self.components:
            if v in c:
                return c
        raise GraphError(f"vertex {v} is not covered by the decomposition")


def degree(g: Graph, v: int) -> int:
    g.check_vertex(v)
    return len(g.adj[v])


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(len(nb) for nb in g.adj)


def neighborhood(g: Graph, X: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``X`` adjacent to at least one vertex of ``X``."""
    X = g.vertex_set(X)
    out: set[int] = set()
    for v in X:
        out |= g.adj[v]
    return frozenset(out - X)


def delete_vertices(g: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on the complement of ``S``, relabelled compactly.

    Returns the new graph and ``labels`` where ``labels[i]`` is the original
    label of new vertex ``i``.
    """
    S = g.vertex_set(S)
    labels = [v for v in range(g.n) if v not in S]
    index = {v: i for i, v in enumerate(labels)}
    adj = tuple(frozenset(index[w] for w in g.adj[v] if w in index) for v in labels)
    return Graph(len(labels), adj), labels


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not present")
    adj = list(g.adj)
    adj[u] = adj[u] - {v}
    adj[v] = adj[v] - {u}
    return Graph(g.n, tuple(adj))


def induced_components(g: Graph, alive: Iterable[int] | None = None) -> ComponentDecomposition:
    """Components of ``g`` restricted to ``alive`` (all vertices by default),
    in original labels, ordered by smallest member."""
    from .kernels import component_masks

    alive_mask = g.full_mask if alive is None else mask_of(g.vertex_set(alive))
    comps = tuple(members(c) for c in component_masks(g.n, g.masks, alive_mask))
    return ComponentDecomposition(comps, sum(1 for c in comps if len(c) % 2))


def components_of(g: Graph) -> ComponentDecomposition:
    return induced_components(g)
