from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs_of_order
from factorcrit.errors import CapabilityError, GraphError
from factorcrit.families import complete, complete_bipartite, cube, cycle, icosahedron, petersen
from factorcrit.graph import Graph
from factorcrit.planarity import (
    K5,
    K33,
    MinorEmbedding,
    check_bipartite_planar_bound,
    check_planar_min_degree,
    check_planarity,
    find_minor,
    has_minor_by_contraction,
    is_bipartite,
    is_planar,
    target_edges,
    verify_minor_embedding,
)
from strategies import graphs


def _nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def test_is_planar_examples():
    assert is_planar(complete(4))
    planar, emb = check_planarity(complete(5))
    assert not planar
    assert emb.target == K5 and emb.branch_sets == tuple(frozenset({i}) for i in range(5))
    planar, emb = check_planarity(petersen())
    assert not planar and emb.target == K5
    assert verify_minor_embedding(petersen(), emb)


def test_petersen_matching_contraction():
    # contracting the spokes of the Petersen graph gives K5
    emb = MinorEmbedding(K5, tuple(frozenset({i, i + 5}) for i in range(5)))
    assert verify_minor_embedding(petersen(), emb)


def test_find_minor_examples():
    emb = find_minor(complete_bipartite(3, 3), K33)
    assert emb.branch_sets == tuple(frozenset({i}) for i in range(6))
    assert find_minor(complete(4), K5) is None
    # subdivide the edge (0, 3) of K3,3 with a new vertex 6
    edges = [e for e in complete_bipartite(3, 3).edges() if e != (0, 3)] + [(0, 6), (6, 3)]
    g = Graph.from_edges(7, edges)
    emb = find_minor(g, K33)
    assert verify_minor_embedding(g, emb)
    assert sorted(len(b) for b in emb.branch_sets) == [1, 1, 1, 1, 1, 2]


def test_target_validation():
    with pytest.raises(GraphError):
        target_edges("K7")
    with pytest.raises(CapabilityError):
        find_minor(complete(13), K5)


def test_verify_examples():
    assert verify_minor_embedding(complete(5), MinorEmbedding(K5, tuple(frozenset({i}) for i in range(5))))
    k4_plus = Graph.from_edges(5, complete(4).edges())
    sets = tuple(frozenset({i}) for i in range(4)) + (frozenset(),)
    assert not verify_minor_embedding(k4_plus, MinorEmbedding(K5, sets))
    with pytest.raises(GraphError):
        verify_minor_embedding(complete(5), MinorEmbedding(K5, tuple(frozenset({i}) for i in range(4, 9))))


def test_verify_rejects_disconnected_or_overlapping():
    g = cycle(6)
    bad = MinorEmbedding(K5, (frozenset({0, 3}), frozenset({1}), frozenset({2}), frozenset({4}), frozenset({5})))
    assert not verify_minor_embedding(g, bad)
    overlap = MinorEmbedding(K5, tuple(frozenset({0, i}) for i in range(5)))
    assert not verify_minor_embedding(complete(5), overlap)


def test_lemma_probes_examples():
    ico = icosahedron()
    assert is_planar(ico) and min(len(a) for a in ico.adj) == 5
    assert check_planar_min_degree(ico)
    assert check_planar_min_degree(complete(7))
    assert check_planar_min_degree(complete(4))
    assert check_bipartite_planar_bound(cycle(4))
    assert check_bipartite_planar_bound(cube()) and cube().m == 12
    assert check_bipartite_planar_bound(complete_bipartite(3, 3))
    assert not is_planar(complete_bipartite(3, 3))
    assert is_bipartite(cube()) and not is_bipartite(cycle(5))


def test_agrees_with_networkx_small():
    for n in range(1, 8):
        for g in graphs_of_order(n):
            planar, emb = check_planarity(g)
            assert planar == nx.check_planarity(_nx(g))[0]
            if planar and n >= 3:
                assert g.m <= 3 * n - 6
                if is_bipartite(g):
                    assert g.m <= 2 * n - 4


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=8, max_n=12, density=0.3))
def test_agrees_with_networkx_random(g):
    planar, emb = check_planarity(g)
    assert planar == nx.check_planarity(_nx(g))[0]
    if emb is not None:
        assert verify_minor_embedding(g, emb)


def test_contraction_oracle_examples():
    assert has_minor_by_contraction(petersen().__class__.from_edges(5, complete(5).edges()), K5)
    assert not has_minor_by_contraction(complete(4), K5)
    assert has_minor_by_contraction(complete_bipartite(3, 3), K33)
    with pytest.raises(CapabilityError):
        has_minor_by_contraction(petersen(), K5)
