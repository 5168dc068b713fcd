"""Maximum matchings, perfect-matching decisions and Tutte barriers."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from . import kernels
from .errors import CapabilityError, GraphError
from .graph import Graph, induced_components, members, neighborhood

__all__ = [
    "Matching",
    "BarrierCertificate",
    "max_matching",
    "matching_number",
    "has_perfect_matching",
    "is_matching",
    "gallai_edmonds",
    "find_barrier",
    "verify_barrier",
    "tutte_condition_holds",
    "tutte_cross_check",
    "TUTTE_LIMIT",
]

TUTTE_LIMIT = 12


@dataclass(frozen=True)
class Matching:
    pairs: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.pairs for v in e)


@dataclass(frozen=True)
class BarrierCertificate:
    """A set ``S`` with more odd components in ``G - S`` than ``|S|``."""

    S: frozenset[int]
    odd_components: tuple[frozenset[int], ...]
    deficiency: int

    def to_dict(self) -> dict:
        return {
            "S": sorted(self.S),
            "odd_components": [sorted(c) for c in self.odd_components],
            "deficiency": self.deficiency,
        }


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching (Edmonds' blossom algorithm)."""
    mate = kernels.max_matching(g.n, g.masks, g.full_mask)
    return Matching(frozenset((v, w) for v, w in enumerate(mate) if v < w))


def matching_number(g: Graph) -> int:
    return max_matching(g).size


def has_perfect_matching(g: Graph) -> bool:
    return kernels.has_perfect_matching(g.n, g.masks, g.full_mask)


def is_matching(g: Graph, pairs: Iterable[tuple[int, int]]) -> bool:
    seen: set[int] = set()
    for u, v in pairs:
        if u == v or not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def gallai_edmonds(g: Graph) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """The Gallai-Edmonds sets ``(D, A, C)``.

    ``D`` holds the vertices missed by some maximum matching; it is read off
    the alternating forests of failed augmenting-path searches from every
    exposed vertex. ``A = N(D)`` and ``C`` is the rest.
    """
    mate = kernels.max_matching(g.n, g.masks, g.full_mask)
    D = members(kernels.outer_vertices(g.n, g.masks, g.full_mask, mate))
    A = neighborhood(g, D)
    C = frozenset(range(g.n)) - D - A
    return D, A, C


def _certificate(g: Graph, S: frozenset[int]) -> BarrierCertificate:
    rest = frozenset(range(g.n)) - S
    odd = induced_components(g, rest).odd_components()
    return BarrierCertificate(S, odd, len(odd) - len(S))


def find_barrier(g: Graph, method: str = "auto") -> BarrierCertificate | None:
    """A Tutte barrier witnessing that ``g`` has no perfect matching.

    Returns ``None`` when ``g`` has a perfect matching. Methods:

    ``"exhaustive"``
        scan every subset (``n <= 12``) and return the lexicographically
        smallest set of maximum deficiency ``n - 2*nu(G)``.
    ``"gallai-edmonds"``
        the set ``A`` of the Gallai-Edmonds decomposition, read off the
        failed alternating-forest searches; also of maximum deficiency.
    ``"auto"`` (default)
        exhaustive up to ``n = 12``, Gallai-Edmonds beyond.
    """
    if method == "auto":
        method = "exhaustive" if g.n <= TUTTE_LIMIT else "gallai-edmonds"
    if method not in ("exhaustive", "gallai-edmonds"):
        raise GraphError(f"unknown barrier method {method!r}")
    if has_perfect_matching(g):
        return None
    if method == "gallai-edmonds":
        _, A, _ = gallai_edmonds(g)
        return _certificate(g, A)
    if g.n > TUTTE_LIMIT:
        raise CapabilityError(f"exhaustive barrier search limited to n <= {TUTTE_LIMIT}")
    _, best = kernels.max_deficiency_set(g.n, g.masks)
    return _certificate(g, members(best))


def verify_barrier(g: Graph, cert: BarrierCertificate) -> bool:
    """Re-derive the odd components of ``G - S`` and check the certificate."""
    S = g.vertex_set(cert.S)
    fresh = _certificate(g, S)
    return (
        fresh.deficiency >= 1
        and fresh.deficiency == cert.deficiency
        and set(fresh.odd_components) == set(cert.odd_components)
    )


def tutte_condition_holds(g: Graph) -> bool:
    """Brute force: ``o(G - S) <= |S|`` for every vertex subset ``S``."""
    if g.n > TUTTE_LIMIT:
        raise CapabilityError(f"exhaustive Tutte check limited to n <= {TUTTE_LIMIT}")
    best, _ = kernels.max_deficiency_set(g.n, g.masks)
    return best <= 0


def tutte_cross_check(g: Graph) -> bool:
    """True iff the blossom decision agrees with the exhaustive Tutte test."""
    return has_perfect_matching(g) == tutte_condition_holds(g)
