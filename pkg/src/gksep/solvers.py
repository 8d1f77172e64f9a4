"""Exact weighted clique / stable set solvers and brute-force oracles."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import NotInClassError
from .flow import FlowNetwork
from .graph import Graph, bits, complement, component_masks, induced_subgraph, is_clique_mask, to_set, validate_weights
from .lexbfs import lexbfs

BRUTE_LIMIT = 40
ALPHA_LIMIT = 128


@dataclass(frozen=True)
class SolveResult:
    value: int
    certificate: frozenset[int] | dict[int, int]


@dataclass(frozen=True)
class BipartiteMWIS:
    value: int
    certificate: frozenset[int]
    cut_value: int
    total_weight: int


def _guard(g: Graph, limit: int = BRUTE_LIMIT) -> None:
    if g.n > limit:
        raise ValueError(f"graph has {g.n} vertices; exhaustive solver is limited to {limit}")


def two_coloring(g: Graph) -> list[int] | None:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.masks[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def bipartite_mwis(g: Graph, weights: Sequence[int] | None = None) -> BipartiteMWIS:
    """Maximum-weight stable set of a bipartite graph via a minimum s-t cut.

    Network: source -> left (capacity w), right -> sink (capacity w), and each
    edge left -> right with a capacity exceeding the total weight. The cut is a
    minimum-weight vertex cover; its complement is the stable set.
    """
    w = validate_weights(g, weights)
    color = two_coloring(g)
    if color is None:
        raise ValueError("graph is not bipartite")
    total = sum(w)
    s, t = g.n, g.n + 1
    net = FlowNetwork(g.n + 2)
    for v in range(g.n):
        if color[v] == 0:
            net.add_arc(s, v, w[v])
            for u in bits(g.masks[v]):
                net.add_arc(v, u, total + 1)
        else:
            net.add_arc(v, t, w[v])
    cut = net.max_flow(s, t)
    reach = net.source_side(s)
    stable = frozenset(v for v in range(g.n) if (v in reach) == (color[v] == 0))
    value = sum(w[v] for v in stable)
    assert value + cut == total
    return BipartiteMWIS(value, stable, cut, total)


def _greedy_clique(g: Graph, w: list[int], seed: int, cand: int) -> int:
    clique = 1 << seed
    cand &= g.masks[seed]
    while cand:
        v = max(bits(cand), key=lambda x: (w[x], -x))
        clique |= 1 << v
        cand &= g.masks[v]
    return clique


def mwc_g2(g: Graph, weights: Sequence[int] | None = None, strict: bool = False, start: int = 0) -> SolveResult:
    """Maximum-weight clique for graphs whose LexBFS order is a bisimplicial elimination ordering.

    For each ``v_i`` the heaviest clique containing it inside ``G[v_1..v_i]`` is
    ``v_i`` plus a maximum-weight stable set of the (bipartite) complement of
    its earlier neighbourhood. With ``strict`` a non-bipartite complement
    raises :class:`NotInClassError`; otherwise that step falls back to a greedy
    clique and optimality is no longer guaranteed.
    """
    w = validate_weights(g, weights)
    if g.n == 0:
        return SolveResult(0, frozenset())
    best_value, best = -1, 0
    prefix = 0
    for i, v in enumerate(lexbfs(g, start).seq):
        earlier = g.masks[v] & prefix
        prefix |= 1 << v
        if is_clique_mask(g, earlier):
            clique = earlier | (1 << v)
        else:
            local, index = induced_subgraph(g, bits(earlier))
            anti = complement(local)
            if two_coloring(anti) is None:
                if strict:
                    raise NotInClassError(f"vertex {v} at position {i} is not bisimplicial in its prefix")
                clique = _greedy_clique(g, w, v, earlier)
            else:
                back = {j: u for u, j in index.items()}
                sol = bipartite_mwis(anti, [w[back[j]] for j in range(local.n)])
                clique = (1 << v) | sum(1 << back[j] for j in sol.certificate)
        value = sum(w[u] for u in bits(clique))
        if value > best_value:
            best_value, best = value, clique
    return SolveResult(best_value, to_set(best))


# -- exhaustive oracles ------------------------------------------------------------

def mwc_bruteforce(g: Graph, weights: Sequence[int] | None = None) -> SolveResult:
    """Heaviest clique by enumerating every clique; ties go to the lexicographically least set."""
    _guard(g)
    w = validate_weights(g, weights)
    best = [0, ()]

    def rec(clique: list[int], cand: int, value: int) -> None:
        key = tuple(clique)
        if value > best[0] or (value == best[0] and key < best[1]):
            best[0], best[1] = value, key
        for v in bits(cand):
            clique.append(v)
            rec(clique, cand & g.masks[v] & ~((1 << (v + 1)) - 1), value + w[v])
            clique.pop()

    rec([], g.full_mask, 0)
    return SolveResult(best[0], frozenset(best[1]))


def mwss_bruteforce(g: Graph, weights: Sequence[int] | None = None) -> SolveResult:
    """Heaviest stable set by enumerating every stable set."""
    _guard(g)
    w = validate_weights(g, weights)
    best = [0, ()]

    def rec(chosen: list[int], cand: int, value: int) -> None:
        key = tuple(chosen)
        if value > best[0] or (value == best[0] and key < best[1]):
            best[0], best[1] = value, key
        for v in bits(cand):
            chosen.append(v)
            rec(chosen, cand & ~g.masks[v] & ~((1 << (v + 1)) - 1), value + w[v])
            chosen.pop()

    rec([], g.full_mask, 0)
    return SolveResult(best[0], frozenset(best[1]))


def alpha(g: Graph) -> int:
    """Stability number via the exact branching solver (double subdivisions reach ~64 vertices)."""
    return mwss_gk_smallscale(g, limit=ALPHA_LIMIT).value


def chromatic_number(g: Graph) -> SolveResult:
    """Exact chromatic number by backtracking; the certificate maps vertex -> colour."""
    _guard(g)
    if g.n == 0:
        return SolveResult(0, {})
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for k in range(1, g.n + 1):
        colors: dict[int, int] = {}

        def place(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            for c in range(min(k, used + 1)):
                if any(colors.get(u) == c for u in bits(g.masks[v])):
                    continue
                colors[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
                del colors[v]
            return False

        if place(0, 0):
            return SolveResult(k, dict(sorted(colors.items())))
    raise AssertionError("unreachable")


def mwss_gk_smallscale(g: Graph, weights: Sequence[int] | None = None, limit: int = 64) -> SolveResult:
    """Exact MWSS by branching on a max-degree vertex, splitting into components, memoised per vertex set."""
    _guard(g, limit)
    w = validate_weights(g, weights)
    masks = g.masks

    @lru_cache(maxsize=None)
    def solve(mask: int) -> tuple[int, int]:
        if not mask:
            return 0, 0
        comps = component_masks(g, mask)
        if len(comps) > 1:
            value, chosen = 0, 0
            for c in comps:
                cv, cs = solve(c)
                value += cv
                chosen |= cs
            return value, chosen
        v = max(bits(mask), key=lambda x: ((masks[x] & mask).bit_count(), -x))
        out_value, out_set = solve(mask & ~(1 << v))
        in_value, in_set = solve(mask & ~masks[v] & ~(1 << v))
        in_value += w[v]
        if in_value > out_value:
            return in_value, in_set | (1 << v)
        return out_value, out_set

    value, chosen = solve(g.full_mask)
    return SolveResult(value, to_set(chosen))
