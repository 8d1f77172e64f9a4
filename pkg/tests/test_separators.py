import pytest
from hypothesis import given, settings

import oracles
from strategies import graphs

from gksep import generators as gen
from gksep.cover import clique_cover_number
from gksep.errors import CapExceeded
from gksep.graph import Graph, disjoint_union, induced_subgraph
from gksep.separators import (
    all_minimal_separators,
    cut_partition_for,
    is_minimal_ab_separator,
    is_separator,
    iter_minimal_separator_masks,
    minimal_ab_separators,
    minimal_cutsets,
    separator_records,
)


def fs(*xs):
    return frozenset(xs)


def test_pair_examples():
    p3 = gen.path(3)
    assert is_minimal_ab_separator(p3, 0, 2, {1})
    c4 = gen.cycle(4)
    assert is_minimal_ab_separator(c4, 0, 2, {1, 3})
    assert not is_separator(c4, 0, 2, {1}) and not is_minimal_ab_separator(c4, 0, 2, {1})
    assert is_minimal_ab_separator(gen.complete_bipartite(2, 3), 0, 1, {2, 3, 4})
    with pytest.raises(ValueError):
        is_minimal_ab_separator(p3, 0, 1, set())
    with pytest.raises(ValueError):
        is_minimal_ab_separator(p3, 0, 2, {0})


def test_minimal_ab_separator_lists():
    assert minimal_ab_separators(gen.cycle(4), 0, 2) == [fs(1, 3)]
    k5e = Graph(5, [e for e in gen.complete(5).edges() if e != (0, 1)])
    assert minimal_ab_separators(k5e, 0, 1) == [fs(2, 3, 4)]
    c6 = gen.cycle(6)
    assert minimal_ab_separators(c6, 0, 3) == [fs(1, 4), fs(1, 5), fs(2, 4), fs(2, 5)]
    assert set(minimal_ab_separators(c6, 0, 3)) == oracles.minimal_ab_separators(c6, 0, 3)
    with pytest.raises(ValueError):
        minimal_ab_separators(c6, 0, 1)


def test_all_minimal_separators_examples():
    assert all_minimal_separators(gen.complete(5)) == []
    assert set(all_minimal_separators(gen.cycle(4))) == {fs(1, 3), fs(0, 2)}
    k23 = all_minimal_separators(gen.complete_bipartite(2, 3))
    assert k23 == [fs(0, 1), fs(2, 3, 4)]
    assert set(k23) == oracles.minimal_separators(gen.complete_bipartite(2, 3))


def test_cutsets():
    assert minimal_cutsets(gen.path(3)) == [fs(1)]
    assert fs() in minimal_cutsets(disjoint_union(gen.complete(2), gen.complete(2)))
    c5 = minimal_cutsets(gen.cycle(5))
    assert set(c5) == {fs(u, v) for u in range(5) for v in range(u + 2, 5) if (u, v) != (0, 4)}
    part = cut_partition_for(gen.path(3), {1})
    assert part.C == fs(1) and {part.A, part.B} == {fs(0), fs(2)}
    with pytest.raises(ValueError):
        cut_partition_for(gen.path(3), {0})


def test_cap_reports_truncation():
    with pytest.raises(CapExceeded):
        all_minimal_separators(gen.cycle(8), cap=3)
    assert len(list(iter_minimal_separator_masks(gen.cycle(8), cap=None))) == 20


def test_exhaustive_against_subset_definition(graphs_upto5):
    for g in graphs_upto5:
        assert set(all_minimal_separators(g)) == oracles.minimal_separators(g)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=6, max_n=8))
def test_random_against_subset_definition(g):
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not g.has_edge(a, b):
                assert set(minimal_ab_separators(g, a, b)) == oracles.minimal_ab_separators(g, a, b)


@given(graphs(max_n=7))
def test_certificate_matches_definition(g):
    adj = oracles.adjacency(g)
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.has_edge(a, b):
                continue
            for s in [set(range(g.n)) - {a, b}, {v for v in adj[a]}]:
                if a in s or b in s:
                    continue
                truth = frozenset(s) in oracles.minimal_ab_separators(g, a, b)
                assert is_minimal_ab_separator(g, a, b, s) == truth


@given(graphs(max_n=7))
def test_records_valid(g):
    for rec in separator_records(g):
        rec.validate(g)


def _subsets(n):
    for code in range(1, 1 << n):
        yield [v for v in range(n) if code >> v & 1]


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_three_hereditary_conditions_agree(g):
    """Separators of G, of every induced subgraph, and cutsets of every induced subgraph."""
    def ok(h, sets):
        return all(clique_cover_number(h, s) <= 2 for s in sets)

    a = ok(g, all_minimal_separators(g))
    subs = [induced_subgraph(g, x)[0] for x in _subsets(g.n)]
    b = all(ok(h, all_minimal_separators(h)) for h in subs)
    c = all(ok(h, minimal_cutsets(h)) for h in subs)
    assert a == b == c
