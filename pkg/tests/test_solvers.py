import pytest
from hypothesis import given, settings

import oracles
from strategies import graphs, weighted_graphs

from gksep import NotInClassError
from gksep import generators as gen
from gksep.flow import FlowNetwork
from gksep.graph import Graph, complement
from gksep.rng import SplitMix64
from gksep.solvers import (
    alpha,
    bipartite_mwis,
    chromatic_number,
    mwc_bruteforce,
    mwc_g2,
    mwss_bruteforce,
    mwss_gk_smallscale,
    two_coloring,
)


def _random_bipartite(rng: SplitMix64, n: int) -> Graph:
    side = [rng.below(2) for _ in range(n)]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v] and rng.random() < 0.4]
    return Graph(n, edges)


def test_flow_basics():
    net = FlowNetwork(4)
    net.add_arc(0, 1, 3)
    net.add_arc(0, 2, 2)
    net.add_arc(1, 2, 5)
    net.add_arc(1, 3, 2)
    net.add_arc(2, 3, 3)
    assert net.max_flow(0, 3) == 5
    assert 0 in net.source_side(0) and 3 not in net.source_side(0)
    with pytest.raises(ValueError):
        net.add_arc(0, 1, -1)


def test_mwc_examples():
    assert mwc_g2(gen.complete(6)).value == 6
    prism = gen.short_n_prism(4)
    w = [1, 2, 3, 4, 1, 1, 1, 1]
    result = mwc_g2(prism, w)
    assert result.value == 10 and result.certificate == frozenset({0, 1, 2, 3})
    assert mwc_g2(gen.edgeless(0)).value == 0


def test_bipartite_examples():
    assert bipartite_mwis(gen.cycle(4)).value == 2
    star = gen.complete_bipartite(1, 4)
    result = bipartite_mwis(star, [5, 1, 1, 1, 1])
    assert result.value == 5 and result.certificate == frozenset({0})
    assert result.cut_value == 4 and result.total_weight == 9
    with pytest.raises(ValueError):
        bipartite_mwis(gen.cycle(5))


def test_bipartite_matches_bruteforce():
    rng = SplitMix64(31)
    for _ in range(300):
        g = _random_bipartite(rng, 1 + rng.below(14))
        w = [rng.below(10) for _ in range(g.n)]
        result = bipartite_mwis(g, w)
        assert result.value == mwss_bruteforce(g, w).value
        assert all(not g.has_edge(u, v) for u in result.certificate for v in result.certificate)
        assert result.value == sum(w[v] for v in result.certificate)


def test_small_invariants():
    assert alpha(gen.cycle(9)) == 4
    assert chromatic_number(gen.cycle(5)).value == 3
    assert chromatic_number(complement(gen.cycle(5))).value == 3
    assert chromatic_number(gen.edgeless(0)).value == 0
    assert two_coloring(gen.cycle(5)) is None


def test_smallscale_edge_cases():
    assert mwss_gk_smallscale(gen.edgeless(7)).value == 7
    assert mwss_gk_smallscale(gen.complete(7), list(range(7))).value == 6
    assert mwss_gk_smallscale(gen.edgeless(0)).value == 0


def test_size_guards():
    with pytest.raises(ValueError):
        mwc_bruteforce(gen.edgeless(41))
    with pytest.raises(ValueError):
        mwss_gk_smallscale(gen.edgeless(65))


def test_strict_rejects_non_members():
    # in K3,3 some vertex sees three pairwise nonadjacent earlier vertices
    k33 = gen.complete_bipartite(3, 3)
    with pytest.raises(NotInClassError):
        mwc_g2(k33, strict=True)
    assert mwc_g2(k33).value == 2


@settings(max_examples=150, deadline=None)
@given(weighted_graphs(max_n=10))
def test_bruteforce_solvers_match_definitions(gw):
    g, w = gw
    assert mwc_bruteforce(g, w).value == oracles.max_weight_clique(g, w)
    assert mwss_bruteforce(g, w).value == oracles.max_weight_stable(g, w)
    assert mwss_gk_smallscale(g, w).value == oracles.max_weight_stable(g, w)


def test_smallscale_matches_bruteforce_at_16():
    rng = SplitMix64(3)
    for _ in range(100):
        g = gen.random_graph(16, rng.random(), rng.next_u64())
        w = [rng.below(20) for _ in range(16)]
        result = mwss_gk_smallscale(g, w)
        assert result.value == mwss_bruteforce(g, w).value
        assert result.value == sum(w[v] for v in result.certificate)


def test_mwc_g2_on_members(g2_corpus):
    rng = SplitMix64(8)
    for g in g2_corpus:
        w = [rng.below(9) + 1 for _ in range(g.n)]
        result = mwc_g2(g, w, strict=True)
        assert result.value == mwc_bruteforce(g, w).value


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_chromatic_number_matches_definition(g):
    result = chromatic_number(g)
    assert result.value == oracles.chromatic_number(g)
    assert oracles.is_proper_coloring(g, result.certificate)
