"""Hypothesis strategies for small simple graphs."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from factorcrit.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9, density: float | None = None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if density is None:
        p = draw(st.sampled_from([0.2, 0.4, 0.6, 0.8]))
    else:
        p = density
    bits = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, x in zip(pairs, bits) if x < p])
