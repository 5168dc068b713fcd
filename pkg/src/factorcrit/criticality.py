"""k-factor-criticality, minimality, and the structures used to bound the
minimum degree of minimal 3-factor-critical planar graphs.

A graph is *k-factor-critical* (k-fc) when deleting any k vertices leaves a
graph with a perfect matching, and *minimal* k-fc when no edge can be
removed without losing that property.

For an edge ``uv`` of a minimal k-fc graph, :func:`find_deficiency_structure`
produces a k-set ``S'`` with ``G - uv - S'`` lacking a perfect matching, and
a Tutte set ``S''`` of that graph leaving exactly ``|S''| + 2`` odd
components, two of which hold ``u`` and ``v``. Neighbourhoods of those two
components give candidate 4-cuts (:class:`PropertyPCut`) and contracting all
odd components gives a bipartite graph (:class:`ContractionBipartite`) whose
edge count is squeezed between a degree count and the planar bipartite
bound. :func:`refine_partition` intersects two cut partitions into the nine
cells used in the degree argument.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .connectivity import edge_connectivity, vertex_connectivity
from .errors import ContractViolation, GraphError
from .graph import Graph, induced_components, mask_of, members, neighborhood
from .matching import find_barrier

__all__ = [
    "PropertyPCut",
    "DeficiencyStructure",
    "ContractionBipartite",
    "PartitionRefinement",
    "kfc_violation",
    "is_k_factor_critical",
    "is_minimal_kfc",
    "check_lemma_connectivity",
    "check_even_components",
    "check_neighborhood_at_least4",
    "even_components_counterexample",
    "neighborhood_counterexample",
    "find_deficiency_structure",
    "build_contraction_bipartite",
    "component_neighborhoods",
    "extract_property_p_cuts",
    "verify_property_p",
    "refine_partition",
]


def _check_k(g: Graph, k: int) -> None:
    if not 0 <= k < g.n:
        raise GraphError(f"k must satisfy 0 <= k < n (n={g.n}, k={k})")


def kfc_violation(g: Graph, k: int) -> frozenset[int] | None:
    """Lexicographically first k-set whose removal leaves no perfect matching."""
    _check_k(g, k)
    s = kernels.kfc_violation(g.n, g.masks, k)
    return None if s < 0 else members(s)


def is_k_factor_critical(g: Graph, k: int) -> bool:
    _check_k(g, k)
    if (g.n - k) % 2:
        return False
    return kernels.kfc_violation(g.n, g.masks, k) < 0


def _masks_without_edge(masks: tuple[int, ...], u: int, v: int) -> list[int]:
    out = list(masks)
    out[u] &= ~(1 << v)
    out[v] &= ~(1 << u)
    return out


def is_minimal_kfc(g: Graph, k: int) -> bool:
    if not is_k_factor_critical(g, k):
        return False
    for u, v in g.edges():
        if kernels.kfc_violation(g.n, _masks_without_edge(g.masks, u, v), k) < 0:
            return False
    return True


def check_lemma_connectivity(g: Graph, k: int) -> bool:
    """A k-fc graph (k >= 1) is k-connected and (k+1)-edge-connected."""
    if k < 1 or not is_k_factor_critical(g, k):
        raise GraphError(f"graph is not {k}-factor-critical with k >= 1")
    return vertex_connectivity(g) >= k and edge_connectivity(g) >= k + 1


def _require_3fc(g: Graph, min_order: int = 4) -> None:
    if g.n < min_order or not is_k_factor_critical(g, 3):
        raise GraphError("graph must be 3-factor-critical with at least 4 vertices")


def check_even_components(g: Graph, S: Iterable[int], check_precondition: bool = True) -> bool:
    """Removing 3 vertices from a 3-fc graph leaves only even components."""
    S = g.vertex_set(S)
    if len(S) != 3:
        raise GraphError("S must have exactly 3 vertices")
    if check_precondition:
        _require_3fc(g)
    alive = g.full_mask & ~mask_of(S)
    return kernels.odd_component_count(g.n, g.masks, alive) == 0


def check_neighborhood_at_least4(
    g: Graph, H: Iterable[int], check_precondition: bool = True
) -> bool | None:
    """``|N(H)| >= 4`` for odd ``H`` whose neighbourhood is a vertex cut.

    ``None`` means the statement does not apply: ``|H|`` is even, or no
    vertex lies outside ``H`` and ``N(H)``.
    """
    H = g.vertex_set(H)
    if check_precondition:
        _require_3fc(g)
    if len(H) % 2 == 0:
        return None
    N = neighborhood(g, H)
    if len(H) + len(N) == g.n:
        return None
    return len(N) >= 4


def even_components_counterexample(g: Graph) -> frozenset[int] | None:
    """First 3-set leaving an odd component, for a graph assumed 3-fc."""
    for combo in combinations(range(g.n), 3):
        alive = g.full_mask & ~mask_of(combo)
        if kernels.odd_component_count(g.n, g.masks, alive):
            return frozenset(combo)
    return None


def neighborhood_counterexample(g: Graph) -> frozenset[int] | None:
    """Smallest-mask odd ``H`` with a cut neighbourhood of size below 4."""
    for h in range(1, 1 << g.n):
        if bin(h).count("1") % 2 == 0:
            continue
        nb = 0
        for v in members(h):
            nb |= g.masks[v]
        nb &= ~h
        if (h | nb) != g.full_mask and bin(nb).count("1") < 4:
            return members(h)
    return None


# -- deficiency structure around an edge ------------------------------------------


@dataclass(frozen=True)
class DeficiencyStructure:
    edge: tuple[int, int]
    k: int
    s_prime: frozenset[int]
    s_double_prime: frozenset[int]
    odd_components: tuple[frozenset[int], ...]
    component_of_u: int
    component_of_v: int

    @property
    def g_u(self) -> frozenset[int]:
        return self.odd_components[self.component_of_u]

    @property
    def g_v(self) -> frozenset[int]:
        return self.odd_components[self.component_of_v]

    def to_dict(self) -> dict:
        return {
            "edge": list(self.edge),
            "k": self.k,
            "s_prime": sorted(self.s_prime),
            "s_double_prime": sorted(self.s_double_prime),
            "odd_components": [sorted(c) for c in self.odd_components],
            "component_of_u": self.component_of_u,
            "component_of_v": self.component_of_v,
        }


def find_deficiency_structure(g: Graph, u: int, v: int, k: int = 3) -> DeficiencyStructure:
    """Locate ``S'`` and ``S''`` for the edge ``uv`` of a minimal k-fc graph.

    ``S'`` is the lexicographically first k-set killing every perfect
    matching of ``G - uv``; ``S''`` is the Gallai-Edmonds barrier of
    ``G - uv - S'``. Raises :class:`ContractViolation` if no such ``S'``
    exists or the barrier does not leave exactly ``|S''| + 2`` odd
    components separating ``u`` from ``v``, which happens only when ``g`` is
    not minimal k-fc at ``uv``.
    """
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    _check_k(g, k)
    masks = _masks_without_edge(g.masks, u, v)
    s = kernels.kfc_violation(g.n, masks, k)
    if s < 0:
        raise ContractViolation(f"G - {u}{v} is still {k}-factor-critical")
    s_prime = members(s)
    rest = [w for w in range(g.n) if w not in s_prime]
    index = {w: i for i, w in enumerate(rest)}
    sub = Graph(
        len(rest),
        tuple(frozenset(index[x] for x in members(masks[w]) if x in index) for w in rest),
    )
    barrier = find_barrier(sub)
    if barrier is None:  # kfc_violation guarantees a deficiency
        raise ContractViolation("no barrier found although no perfect matching exists")
    s_double_prime = frozenset(rest[i] for i in barrier.S)
    odd = tuple(
        sorted((frozenset(rest[i] for i in c) for c in barrier.odd_components), key=min)
    )
    if len(odd) != len(s_double_prime) + 2:
        raise ContractViolation(
            f"{len(odd)} odd components for |S''| = {len(s_double_prime)}; expected |S''| + 2"
        )
    iu = next((i for i, c in enumerate(odd) if u in c), None)
    iv = next((i for i, c in enumerate(odd) if v in c), None)
    if iu is None or iv is None or iu == iv:
        raise ContractViolation("u and v are not in two different odd components")
    return DeficiencyStructure((u, v), k, s_prime, s_double_prime, odd, iu, iv)


@dataclass(frozen=True)
class ContractionBipartite:
    """``S' ∪ S''`` on the left, one contracted vertex per odd component on
    the right; edges are pairs ``(left vertex, right index)``."""

    left_side: tuple[int, ...]
    right_size: int
    edges: frozenset[tuple[int, int]]
    u_index: int
    v_index: int

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def right_degree(self, i: int) -> int:
        return sum(1 for _, j in self.edges if j == i)

    def left_degree(self, x: int) -> int:
        return sum(1 for y, _ in self.edges if y == x)

    @property
    def planar_edge_bound(self) -> int:
        return 2 * (len(self.left_side) + self.right_size) - 4


def build_contraction_bipartite(g: Graph, d: DeficiencyStructure) -> ContractionBipartite:
    left = tuple(sorted(d.s_prime | d.s_double_prime))
    edges = frozenset(
        (x, i)
        for i, comp in enumerate(d.odd_components)
        for x in left
        if g.adj[x] & comp
    )
    return ContractionBipartite(
        left, len(d.odd_components), edges, d.component_of_u, d.component_of_v
    )


# -- Property P cuts ------------------------------------------------------------------


@dataclass(frozen=True)
class PropertyPCut:
    """A 4-set ``cut`` holding ``edge_v`` whose removal leaves an odd component
    ``odd_component`` around ``edge_u`` joined to ``edge_v`` only by the edge
    itself. ``is_vertex_cut`` records whether ``G - cut`` is disconnected."""

    edge_u: int
    edge_v: int
    cut: frozenset[int]
    odd_component: frozenset[int]
    is_vertex_cut: bool

    def to_dict(self) -> dict:
        return {
            "edge": [self.edge_u, self.edge_v],
            "cut": sorted(self.cut),
            "odd_component": sorted(self.odd_component),
            "is_vertex_cut": self.is_vertex_cut,
        }


def component_neighborhoods(g: Graph, d: DeficiencyStructure) -> tuple[frozenset[int], frozenset[int]]:
    return neighborhood(g, d.g_u), neighborhood(g, d.g_v)


def _property_p(g: Graph, u: int, v: int, comp: frozenset[int], cut: frozenset[int]) -> PropertyPCut | None:
    if len(cut) != 4 or v not in cut or u not in comp or len(comp) % 2 == 0:
        return None
    parts = induced_components(g, frozenset(range(g.n)) - cut)
    if parts.component_of(u) != comp:
        return None
    if {w for w in comp if v in g.adj[w]} != {u}:
        return None
    return PropertyPCut(u, v, cut, comp, parts.count >= 2)


def extract_property_p_cuts(
    g: Graph, d: DeficiencyStructure
) -> tuple[PropertyPCut | None, PropertyPCut | None]:
    """Cuts ``N(G_u)`` and ``N(G_v)`` when they satisfy Property P.

    Property P is only defined for 3-fc graphs; for other ``k`` both sides
    are ``None`` (use :func:`component_neighborhoods` to inspect sizes).
    """
    if d.k != 3:
        return None, None
    u, v = d.edge
    xu, xv = component_neighborhoods(g, d)
    return _property_p(g, u, v, d.g_u, xu), _property_p(g, v, u, d.g_v, xv)


def verify_property_p(g: Graph, p: PropertyPCut) -> bool:
    """Re-check conditions (i)-(iv) from scratch."""
    cut = g.vertex_set(p.cut)
    comp = g.vertex_set(p.odd_component)
    if not g.has_edge(p.edge_u, p.edge_v):
        return False
    if len(cut) != 4 or p.edge_v not in cut:
        return False
    alive = g.full_mask & ~mask_of(cut)
    found = [c for c in kernels.component_masks(g.n, g.masks, alive) if (c >> p.edge_u) & 1]
    if len(found) != 1 or found[0] != mask_of(comp) or len(comp) % 2 == 0:
        return False
    touching = [w for w in comp if p.edge_v in g.adj[w]]
    if touching != [p.edge_u]:
        return False
    return p.is_vertex_cut == (len(kernels.component_masks(g.n, g.masks, alive)) >= 2)


# -- nine-cell refinement ---------------------------------------------------------------


@dataclass(frozen=True)
class PartitionRefinement:
    """Common refinement of ``{O, X, rest}`` and ``{G_u, X_u, rest}``."""

    V1: frozenset[int]
    V2: frozenset[int]
    V3: frozenset[int]
    V4: frozenset[int]
    X1: frozenset[int]
    X2: frozenset[int]
    Xu1: frozenset[int]
    Xu2: frozenset[int]
    C: frozenset[int]

    @property
    def x1(self) -> int:
        return len(self.X1)

    @property
    def x2(self) -> int:
        return len(self.X2)

    @property
    def y1(self) -> int:
        return len(self.Xu1)

    @property
    def y2(self) -> int:
        return len(self.Xu2)

    @property
    def c(self) -> int:
        return len(self.C)

    @property
    def cut_total(self) -> int:
        """``x1 + x2 + y1 + y2 + 2c``, which is ``|X| + |X_u|``."""
        return self.x1 + self.x2 + self.y1 + self.y2 + 2 * self.c

    @property
    def S1(self) -> frozenset[int]:
        return self.X1 | self.C | self.Xu1

    @property
    def S2(self) -> frozenset[int]:
        return self.X1 | self.C | self.Xu2

    @property
    def S3(self) -> frozenset[int]:
        return self.Xu2 | self.C | self.X2

    @property
    def S4(self) -> frozenset[int]:
        return self.X2 | self.C | self.Xu1

    def cells(self) -> dict[str, frozenset[int]]:
        names = ("V1", "V2", "V3", "V4", "X1", "X2", "Xu1", "Xu2", "C")
        return {name: getattr(self, name) for name in names}

    def claims(self) -> dict[str, bool]:
        """The four claims of the degree argument, evaluated, not asserted."""
        return {
            "claim1_s1_at_least_5": len(self.S1) >= 5,
            "claim2_small_separator_empty_side": all(
                len(s) > 2 or not side
                for s, side in ((self.S2, self.V2), (self.S3, self.V3), (self.S4, self.V4))
            ),
            "claim3_v3_even": len(self.V3) % 2 == 0,
            "claim4_x2_nonempty": bool(self.X2),
        }


def refine_partition(
    g: Graph,
    X: Iterable[int],
    O: Iterable[int],
    Xu: Iterable[int],
    Gu: Iterable[int],
    u: int | None = None,
    v: int | None = None,
) -> PartitionRefinement:
    """Intersect the partitions induced by the cuts ``X`` and ``Xu``.

    ``O`` must be a union of components of ``G - X`` and ``Gu`` a component
    of ``G - Xu``. When given, ``u`` must lie in ``O ∩ Gu`` and ``v`` in
    ``Xu ∩ O``.
    """
    X, O, Xu, Gu = (g.vertex_set(s) for s in (X, O, Xu, Gu))
    if not O or O & X or not neighborhood(g, O) <= X:
        raise GraphError("O must be a non-empty union of components of G - X")
    if not Gu or Gu & Xu or not neighborhood(g, Gu) <= Xu:
        raise GraphError("Gu must be a component of G - Xu")
    if induced_components(g, Gu).count != 1:
        raise GraphError("Gu must be connected")
    if u is not None and u not in O & Gu:
        raise GraphError("u must lie in O and Gu")
    if v is not None and v not in Xu & O:
        raise GraphError("v must lie in Xu and O")
    everything = frozenset(range(g.n))
    rest_o = everything - O - X
    rest_u = everything - Gu - Xu
    return PartitionRefinement(
        V1=Gu & O,
        V2=Gu & rest_o,
        V3=rest_u & rest_o,
        V4=rest_u & O,
        X1=X & Gu,
        X2=X & rest_u,
        Xu1=Xu & O,
        Xu2=Xu & rest_o,
        C=X & Xu,
    )
