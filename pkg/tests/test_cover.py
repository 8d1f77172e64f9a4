from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from strategies import graphs

from gksep import generators as gen
from gksep.cover import (
    _anti_adjacency,
    _k_color,
    _two_color,
    clique_cover_number,
    has_k_cover_mask,
    is_k_simplicial_vertex,
    k_simplicial_cover,
)
from gksep.graph import Graph, complement, to_mask
from gksep.rng import SplitMix64


def test_cover_number_examples():
    k4 = gen.complete(4)
    assert clique_cover_number(k4, [0, 1, 2]) == 1
    assert clique_cover_number(k4, []) == 0
    assert clique_cover_number(gen.complete_bipartite(2, 3), [2, 3, 4]) == 3
    assert clique_cover_number(gen.cycle(5), range(5)) == 3


def test_k_cover_examples():
    c4 = gen.cycle(4)
    cover = k_simplicial_cover(c4, range(4), 2)
    assert cover is not None and len(cover.parts) == 2
    cover.validate(c4, range(4))
    s = [0, 2, 4]
    singletons = k_simplicial_cover(gen.cycle(6), s, len(s))
    assert sorted(map(sorted, singletons.parts)) == [[0], [2], [4]]
    assert k_simplicial_cover(gen.complete_bipartite(2, 3), [2, 3, 4], 2) is None


def test_certificates_are_deterministic():
    g = gen.cycle(6)
    assert k_simplicial_cover(g, range(6), 3) == k_simplicial_cover(g, range(6), 3)


def test_k_simplicial_vertices():
    g = gen.random_chordal(10, 4)
    cover = is_k_simplicial_vertex(g, 9, 1)
    assert cover is not None and len(cover.parts) <= 1
    k24 = gen.complete_bipartite(2, 3)
    assert is_k_simplicial_vertex(k24, 0, 2) is None
    assert is_k_simplicial_vertex(gen.edgeless(1), 0, 0).parts == ()


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9), st.data())
def test_cover_number_is_chromatic_number_of_complement(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    expected = oracles.chromatic_number(complement(_sub(g, s))) if s else 0
    number = clique_cover_number(g, s)
    assert number == expected
    for k in range(len(s) + 1):
        cover = k_simplicial_cover(g, s, k)
        assert (cover is not None) == (k >= number)
        if cover is not None:
            cover.validate(g, s)
            assert len(cover.parts) <= k
            assert k_simplicial_cover(g, s, k + 1) is not None


def _sub(g: Graph, s):
    from gksep.graph import induced_subgraph
    return induced_subgraph(g, s)[0]


def test_bipartite_route_matches_backtracking():
    rng = SplitMix64(2024)
    for i in range(10_000):
        g = gen.random_graph(2 + i % 8, rng.random(), rng.next_u64())
        s_mask = to_mask(v for v in range(g.n) if rng.random() < 0.7)
        anti = _anti_adjacency(g, s_mask)
        assert (_two_color(anti) is None) == (_k_color(anti, 2) is None)
        assert has_k_cover_mask(g, s_mask, 2) == (_k_color(anti, 2) is not None)
