"""Hypothesis strategies for small labelled graphs."""
from hypothesis import strategies as st

from gksep.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def weighted_graphs(draw, min_n: int = 0, max_n: int = 8, max_w: int = 100):
    g = draw(graphs(min_n, max_n))
    w = draw(st.lists(st.integers(0, max_w), min_size=g.n, max_size=g.n))
    return g, w
