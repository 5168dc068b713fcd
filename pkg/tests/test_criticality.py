from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import graphs_of_order
from factorcrit import graph6
from factorcrit.connectivity import enumerate_vertex_cuts
from factorcrit.criticality import (
    PropertyPCut,
    build_contraction_bipartite,
    check_even_components,
    check_lemma_connectivity,
    check_neighborhood_at_least4,
    component_neighborhoods,
    extract_property_p_cuts,
    find_deficiency_structure,
    is_k_factor_critical,
    is_minimal_kfc,
    kfc_violation,
    refine_partition,
    verify_property_p,
)
from factorcrit.errors import ContractViolation, GraphError
from factorcrit.families import complete, cycle, pentagonal_bipyramid
from factorcrit.graph import Graph, delete_edge
from strategies import graphs

K4, K5, K6, K7 = (complete(n) for n in (4, 5, 6, 7))
C5, C6, C8 = cycle(5), cycle(6), cycle(8)
BIPYRAMID = pentagonal_bipyramid()  # equator 0..4, apexes 5 and 6


def _adj(g: Graph):
    return {v: frozenset(g.adj[v]) for v in range(g.n)}


class TestFactorCriticality:
    def test_examples(self):
        assert is_k_factor_critical(C5, 1)
        assert is_k_factor_critical(K4, 2)
        assert not is_k_factor_critical(C6, 2)
        assert kfc_violation(C6, 2) == {0, 2}

    def test_k_zero_is_perfect_matching(self):
        assert is_k_factor_critical(C6, 0)
        assert not is_k_factor_critical(C5, 0)

    def test_k_range(self):
        with pytest.raises(GraphError):
            is_k_factor_critical(K4, 4)
        with pytest.raises(GraphError):
            is_k_factor_critical(K4, -1)

    def test_parity_gate(self):
        for n in range(1, 9):
            for g in graphs_of_order(n):
                for k in range(n):
                    if (n - k) % 2:
                        assert not is_k_factor_critical(g, k)

    def test_against_oracle(self):
        for n in range(1, 8):
            for g in graphs_of_order(n):
                adj = _adj(g)
                for k in range(min(n, 4)):
                    assert is_k_factor_critical(g, k) == oracles.is_kfc(adj, k)
                    assert is_minimal_kfc(g, k) == oracles.is_minimal_kfc(adj, k)

    def test_minimal_examples(self):
        assert is_minimal_kfc(K4, 2)
        assert is_minimal_kfc(K5, 3)
        assert not is_minimal_kfc(K6, 2)
        assert is_k_factor_critical(delete_edge(K6, 0, 1), 2)
        assert is_minimal_kfc(C5, 1)

    def test_bipyramid(self):
        assert is_k_factor_critical(BIPYRAMID, 3)


class TestLemmaChecks:
    def test_connectivity_examples(self):
        assert check_lemma_connectivity(K4, 2)
        assert check_lemma_connectivity(C5, 1)
        assert check_lemma_connectivity(K5, 3)

    def test_connectivity_precondition(self):
        with pytest.raises(GraphError):
            check_lemma_connectivity(C6, 2)
        with pytest.raises(GraphError):
            check_lemma_connectivity(C6, 0)

    def test_connectivity_on_minimal_graphs(self):
        for n in range(3, 9):
            for g in graphs_of_order(n):
                for k in (1, 2, 3):
                    if k < n and is_minimal_kfc(g, k):
                        assert check_lemma_connectivity(g, k)
                        assert min(len(a) for a in g.adj) >= k + 1

    def test_even_components_examples(self):
        for S in combinations(range(5), 3):
            assert check_even_components(K5, S)
        assert check_even_components(BIPYRAMID, {5, 6, 0})
        for S in [(0, 1, 2), (2, 4, 6), (0, 3, 5)]:
            assert check_even_components(K7, S)

    def test_even_components_precondition(self):
        with pytest.raises(GraphError):
            check_even_components(C5, {0, 1, 2})
        with pytest.raises(GraphError):
            check_even_components(K5, {0, 1})
        # without the precondition it is a plain parity test: C5 - {0,2,3} = {1}, {4}
        assert check_even_components(C5, {0, 2, 3}, check_precondition=False) is False

    def test_neighborhood_examples(self):
        assert check_neighborhood_at_least4(K5, {0}) is None
        assert check_neighborhood_at_least4(BIPYRAMID, {0}) is True
        assert check_neighborhood_at_least4(BIPYRAMID, {0, 1}) is None

    def test_neighborhood_precondition(self):
        with pytest.raises(GraphError):
            check_neighborhood_at_least4(C5, {0})


class TestDeficiencyStructure:
    def test_k5(self):
        d = find_deficiency_structure(K5, 0, 1, 3)
        assert d.s_prime == {2, 3, 4}
        assert d.s_double_prime == frozenset()
        assert d.g_u == {0} and d.g_v == {1}

    def test_k4(self):
        d = find_deficiency_structure(K4, 0, 1, 2)
        assert d.s_prime == {2, 3} and d.s_double_prime == frozenset()
        assert d.odd_components == ({0}, {1})

    def test_c5(self):
        # both 2 and 4 qualify for S'; the lexicographically first is kept
        d = find_deficiency_structure(C5, 0, 1, 1)
        assert d.s_prime == {2}
        assert d.s_double_prime == frozenset()
        assert d.g_u == {0, 3, 4} and d.g_v == {1}
        qualifying = [
            w for w in range(5)
            if not oracles.has_pm(_adj(delete_edge(C5, 0, 1)), frozenset(range(5)) - {w})
        ]
        assert qualifying == [2, 4]

    def test_not_minimal_raises(self):
        with pytest.raises(ContractViolation):
            find_deficiency_structure(K6, 0, 1, 2)

    def test_absent_edge(self):
        with pytest.raises(GraphError):
            find_deficiency_structure(C5, 0, 2, 1)

    def test_all_minimal_small(self):
        for n in range(3, 9):
            for g in graphs_of_order(n):
                for k in (1, 2, 3):
                    if k >= n or not is_minimal_kfc(g, k):
                        continue
                    for u, v in g.edges():
                        d = find_deficiency_structure(g, u, v, k)
                        assert len(d.odd_components) == len(d.s_double_prime) + 2
                        assert d.component_of_u != d.component_of_v

    def test_to_dict(self):
        d = find_deficiency_structure(K5, 0, 1, 3)
        assert d.to_dict()["s_prime"] == [2, 3, 4]


class TestContractionBipartite:
    def test_k5(self):
        d = find_deficiency_structure(K5, 0, 1, 3)
        h = build_contraction_bipartite(K5, d)
        assert h.left_side == (2, 3, 4) and h.right_size == 2
        assert h.right_degree(h.u_index) == h.right_degree(h.v_index) == 3
        assert h.edge_count == 6 == 4 * len(d.s_double_prime) + 6

    def test_k4(self):
        h = build_contraction_bipartite(K4, find_deficiency_structure(K4, 0, 1, 2))
        assert len(h.left_side) == 2 and h.right_size == 2
        assert h.right_degree(0) == h.right_degree(1) == 2
        assert h.edge_count == 4

    def test_right_degree_is_neighbourhood_in_left(self):
        for g in graphs_of_order(7):
            if not is_minimal_kfc(g, 3):
                continue
            for u, v in g.edges():
                d = find_deficiency_structure(g, u, v, 3)
                h = build_contraction_bipartite(g, d)
                left = set(h.left_side)
                assert h.right_size == len(d.s_double_prime) + 2
                for i, comp in enumerate(d.odd_components):
                    nb = set().union(*(g.adj[w] for w in comp)) - comp
                    assert h.right_degree(i) == len(nb & left)


class TestPropertyP:
    def test_k5_both_sides(self):
        d = find_deficiency_structure(K5, 0, 1, 3)
        cu, cv = extract_property_p_cuts(K5, d)
        assert cu.cut == {1, 2, 3, 4} and cu.odd_component == {0}
        assert cv.cut == {0, 2, 3, 4} and cv.odd_component == {1}
        assert not cu.is_vertex_cut  # K5 - X is a single vertex
        assert verify_property_p(K5, cu) and verify_property_p(K5, cv)

    def test_neighbourhood_of_five_is_absent(self):
        g = graph6.decode("HCrbrqu")
        d = find_deficiency_structure(g, 6, 8, 3)
        xu, _ = component_neighborhoods(g, d)
        assert len(xu) == 5
        cu, _ = extract_property_p_cuts(g, d)
        assert cu is None

    def test_k4_is_not_labelled(self):
        d = find_deficiency_structure(K4, 0, 1, 2)
        assert extract_property_p_cuts(K4, d) == (None, None)
        xu, xv = component_neighborhoods(K4, d)
        assert len(xu) == len(xv) == 3

    def test_verify_rejects_tampered(self):
        d = find_deficiency_structure(K5, 0, 1, 3)
        cu, _ = extract_property_p_cuts(K5, d)
        for bad in (
            PropertyPCut(0, 1, frozenset({1, 2, 3}), frozenset({0}), False),
            PropertyPCut(0, 1, frozenset({2, 3, 4, 1}), frozenset({0, 1}), False),
            PropertyPCut(0, 1, cu.cut, cu.odd_component, True),
        ):
            assert not verify_property_p(K5, bad)


class TestRefinePartition:
    def test_c8(self):
        r = refine_partition(C8, {0, 2, 4, 6}, {1}, {1, 3, 5, 7}, {0})
        cells = r.cells()
        assert frozenset().union(*cells.values()) == frozenset(range(8))
        assert sum(len(c) for c in cells.values()) == 8
        assert (r.x1, r.x2, r.y1, r.y2, r.c) == (1, 3, 1, 3, 0)
        assert r.cut_total == 8

    def test_equal_cuts(self):
        r = refine_partition(C8, {0, 4}, {1, 2, 3}, {0, 4}, {1, 2, 3}, u=2)
        assert r.c == 2 and r.x1 == r.x2 == r.y1 == r.y2 == 0
        g = complete(5).__class__.from_edges(
            9, [(a, b) for a in range(4) for b in range(4, 9)] + [(4, 5), (6, 7)]
        )
        r = refine_partition(g, {0, 1, 2, 3}, {4, 5}, {0, 1, 2, 3}, {4, 5})
        assert r.c == 4 and (r.x1, r.x2, r.y1, r.y2) == (0, 0, 0, 0)
        assert r.cut_total == 8
        assert r.V1 == {4, 5}

    def test_claims_are_reported(self):
        r = refine_partition(C8, {0, 2, 4, 6}, {1}, {1, 3, 5, 7}, {0})
        claims = r.claims()
        assert set(claims) == {
            "claim1_s1_at_least_5",
            "claim2_small_separator_empty_side",
            "claim3_v3_even",
            "claim4_x2_nonempty",
        }
        assert claims["claim1_s1_at_least_5"] is False
        assert r.S1 == {0, 1} and r.S3 == {2, 3, 4, 5, 6, 7}

    def test_endpoint_checks(self):
        g = pentagonal_bipyramid()
        X = frozenset({1, 4, 5, 6})
        r = refine_partition(g, X, {0}, X, {0}, u=0)
        assert r.c == 4
        with pytest.raises(GraphError):
            refine_partition(g, X, {0}, X, {0}, u=2)
        with pytest.raises(GraphError):
            refine_partition(g, X, {0}, X, {0}, v=0)

    def test_malformed(self):
        with pytest.raises(GraphError):
            refine_partition(C8, {0, 2}, {1, 3}, {1, 3, 5, 7}, {0})  # O not separated by X
        with pytest.raises(GraphError):
            refine_partition(C8, {0, 2, 4, 6}, {1}, {1, 5}, {2, 3})  # Gu leaks into 4
        with pytest.raises(GraphError):
            refine_partition(C8, {0, 2, 4, 6}, {1}, {1, 3, 5, 7}, {0, 2})  # Gu disconnected

    @settings(max_examples=80, deadline=None)
    @given(graphs(min_n=6, max_n=9, density=0.5), st.data())
    def test_nine_cells_partition(self, g, data):
        cuts = [w for size in (2, 3, 4) if size <= g.n - 2 for w in enumerate_vertex_cuts(g, size)]
        if not cuts:
            return
        a = data.draw(st.sampled_from(cuts))
        b = data.draw(st.sampled_from(cuts))
        O = data.draw(st.sampled_from(a.separated.components))
        Gu = data.draw(st.sampled_from(b.separated.components))
        r = refine_partition(g, a.cut_set, O, b.cut_set, Gu)
        cells = list(r.cells().values())
        assert sum(len(c) for c in cells) == g.n
        assert frozenset().union(*cells) == frozenset(range(g.n))
        assert r.x1 + r.x2 + r.c == len(a.cut_set)
        assert r.y1 + r.y2 + r.c == len(b.cut_set)
        assert r.cut_total == len(a.cut_set) + len(b.cut_set)
