"""Induced-minor models: verification, search, and the G_2 forbidden-minor scan."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import BudgetExhausted
from .generators import forbidden_g2_minor
from .graph import Graph, bits, complement, component_masks, is_connected_mask, neighborhood_mask, to_mask, to_set

DEFAULT_BUDGET = 2_000_000

InducedMinorModel = dict[int, frozenset[int]]


def verify_model(g: Graph, h: Graph, model: Mapping[int, frozenset[int]]) -> bool:
    if sorted(model) != list(range(h.n)):
        return False
    sets = [to_mask(model[v]) for v in range(h.n)]
    used = 0
    for x in sets:
        if not x or x & used or x & ~g.full_mask or not is_connected_mask(g, x):
            return False
        used |= x
    for u in range(h.n):
        nu = neighborhood_mask(g, sets[u])
        for v in range(u + 1, h.n):
            if bool(nu & sets[v]) != h.has_edge(u, v):
                return False
    return True


def connected_subsets(g: Graph, within: int | None = None, limit: int | None = None) -> list[int]:
    """Every nonempty connected vertex set of ``G[within]``, each produced once."""
    masks = g.masks
    if within is None:
        within = g.full_mask
    out: list[int] = []

    def extend(sub: int, ext: int, closed: int, higher: int) -> None:
        out.append(sub)
        if limit is not None and len(out) > limit:
            raise BudgetExhausted(limit, "connected-subset enumeration")
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            extend(sub | low, ext | (masks[w] & higher & ~closed), closed | masks[w] | low, higher)

    for v in bits(within):
        higher = within & ~((1 << (v + 1)) - 1)
        start = masks[v] & higher
        extend(1 << v, start, masks[v] | (1 << v), higher)
    return out


def _search_order(h: Graph) -> list[int]:
    order: list[int] = []
    placed = 0
    while len(order) < h.n:
        best = max(
            (v for v in range(h.n) if not placed >> v & 1),
            key=lambda v: (h.degree(v), (h.masks[v] & placed).bit_count(), -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def _twin_predecessors(h: Graph, order: list[int]) -> dict[int, int]:
    """For each H-vertex, the previous vertex in ``order`` that is a twin of it."""
    last: dict[tuple[str, int], int] = {}
    pred = {}
    for v in order:
        for key in (("open", h.masks[v]), ("closed", h.masks[v] | (1 << v))):
            if key in last:
                pred[v] = last[key]
            last[key] = v
    return pred


def _is_minimal_connector(g: Graph, x: int, need: list[int]) -> bool:
    """No proper connected subset of ``x`` meets every set in ``need``."""
    for y in bits(x):
        for part in component_masks(g, x & ~(1 << y)):
            if all(part & n for n in need):
                return False
    return True


def find_induced_minor(g: Graph, h: Graph, budget: int | None = DEFAULT_BUDGET) -> InducedMinorModel | None:
    """Search for an induced-minor model of ``h`` in ``g``.

    Branch sets are placed one H-vertex at a time. A candidate must avoid the
    neighbourhoods of the sets of its H-non-neighbours and touch the sets of
    its H-neighbours, so candidates are enumerated only inside the components
    of that allowed region which touch every required set. The last H-vertex
    simply takes such a component whole. Twin H-vertices get branch sets with
    increasing minimum vertex. Raises :class:`BudgetExhausted` when more than
    ``budget`` branch sets have been tried.
    """
    if h.n == 0:
        return {}
    if h.n > g.n:
        return None
    order = _search_order(h)
    pred = _twin_predecessors(h, order)
    hm = h.masks
    chosen: dict[int, int] = {}
    nbhd: dict[int, int] = {}
    placed_order: list[int] = []
    nodes = 0

    def region(j: int, free: int) -> tuple[int, list[int]]:
        allowed = free
        need = []
        for i in placed_order:
            if hm[j] >> i & 1:
                need.append(nbhd[i])
            else:
                allowed &= ~nbhd[i]
        return allowed, need

    def usable_components(j: int, free: int) -> list[int]:
        allowed, need = region(j, free)
        if not allowed:
            return []
        return [c for c in component_masks(g, allowed) if all(c & x for x in need)]

    def feasible_future(free: int, depth: int) -> bool:
        if free.bit_count() < h.n - depth:
            return False
        return all(usable_components(j, free) for j in order[depth:])

    def spend() -> None:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExhausted(budget, "induced-minor search")

    def place(depth: int, used: int) -> bool:
        u = order[depth]
        free = g.full_mask & ~used
        comps = usable_components(u, free)
        if depth == h.n - 1:
            if comps:
                spend()
                chosen[u] = comps[0]
                return True
            return False
        _, need = region(u, free)
        floor = -1
        if u in pred:
            t = chosen[pred[u]]
            floor = (t & -t).bit_length() - 1
        later = 0
        for j in order[depth + 1:]:
            later |= 1 << j
        # with no H-neighbours still to come, shrinking the set only helps
        minimal_only = not hm[u] & later
        cands = []
        for comp in comps:
            for x in connected_subsets(g, comp, limit=budget):
                if (x & -x).bit_length() - 1 > floor and all(x & n for n in need):
                    if not minimal_only or _is_minimal_connector(g, x, need):
                        cands.append(x)
        cands.sort(key=lambda x: (x.bit_count(), x))
        for x in cands:
            spend()
            chosen[u] = x
            nbhd[u] = neighborhood_mask(g, x)
            placed_order.append(u)
            if feasible_future(free & ~x, depth + 1) and place(depth + 1, used | x):
                return True
            placed_order.pop()
            del chosen[u], nbhd[u]
        return False

    if not place(0, 0):
        return None
    return {u: to_set(chosen[u]) for u in range(h.n)}


@dataclass(frozen=True)
class ScanHit:
    k: int
    minor: Graph
    model: InducedMinorModel


def g2_forbidden_minor_scan(g: Graph, k_max: int | None = None, budget: int | None = DEFAULT_BUDGET) -> ScanHit | None:
    """Look for ``complement(K2 + C_{2k+1})`` as an induced minor, k = 1, 2, ... while it fits."""
    if k_max is not None and k_max < 1:
        raise ValueError("k_max must be at least 1")
    k = 1
    while 2 * k + 3 <= g.n and (k_max is None or k <= k_max):
        h = forbidden_g2_minor(k)
        model = find_induced_minor(g, h, budget)
        if model is not None:
            return ScanHit(k, h, model)
        k += 1
    return None


def _subgraph_embeddings(big: Graph, small: Graph, budget: int | None) -> Iterator[dict[int, int]]:
    order = sorted(range(small.n), key=lambda v: (-small.degree(v), v))
    sm, bm = small.masks, big.masks
    phi: dict[int, int] = {}
    used = 0
    nodes = 0

    def rec(i: int) -> Iterator[dict[int, int]]:
        nonlocal used, nodes
        if i == len(order):
            yield dict(phi)
            return
        v = order[i]
        cand = big.full_mask & ~used
        for u in order[:i]:
            if sm[v] >> u & 1:
                cand &= bm[phi[u]]
        for x in bits(cand):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExhausted(budget, "subgraph embedding")
            phi[v] = x
            used |= 1 << x
            yield from rec(i + 1)
            used &= ~(1 << x)
            del phi[v]

    yield from rec(0)


def complement_subgraph_check(g: Graph, h: Graph, budget: int | None = DEFAULT_BUDGET) -> bool:
    """True iff ``complement(h)`` is isomorphic to a (not necessarily induced) subgraph of ``complement(g)``."""
    if h.n > g.n:
        return False
    return next(_subgraph_embeddings(complement(g), complement(h), budget), None) is not None
