"""Named graph families and seeded random graphs."""
from __future__ import annotations

from typing import Iterable

from .graph import Graph, bits, complement, complete_join, glue_along_clique, is_clique_mask, relabel
from .rng import SplitMix64


def complete(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def edgeless(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(p: int, q: int) -> Graph:
    """Parts ``0..p-1`` and ``p..p+q-1``."""
    return complete_join(edgeless(p), edgeless(q))


def short_n_prism(n: int) -> Graph:
    """Cliques ``a_i = i`` and ``b_i = n + i`` with ``a_i b_j`` an edge iff ``i == j``."""
    if n < 3:
        raise ValueError("short n-prism needs n >= 3")
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((i, j))
            edges.append((n + i, n + j))
        edges.append((i, n + i))
    return Graph(2 * n, edges)


def _add_path(edges: list, start: int, end: int, length: int, nxt: int) -> int:
    """Join ``start`` to ``end`` by a path with ``length`` edges; return next free label."""
    prev = start
    for _ in range(length - 1):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    edges.append((prev, end))
    return nxt


def theta(l1: int, l2: int, l3: int) -> Graph:
    """Three internally disjoint paths between ``a=0`` and ``b=1`` with the given edge counts."""
    lengths = (l1, l2, l3)
    if min(lengths) < 2:
        raise ValueError("theta paths need at least 2 edges each")
    edges: list = []
    nxt = 2
    for length in lengths:
        nxt = _add_path(edges, 0, 1, length, nxt)
    return Graph(nxt, edges)


def pyramid(l1: int, l2: int, l3: int) -> Graph:
    """Apex ``0``, triangle ``1,2,3``; path ``i`` joins the apex to ``i`` with ``l_i`` edges."""
    lengths = (l1, l2, l3)
    if min(lengths) < 1:
        raise ValueError("pyramid paths need at least 1 edge")
    if sum(length >= 2 for length in lengths) < 2:
        raise ValueError("at least two pyramid paths must be subdivided")
    edges: list = [(1, 2), (1, 3), (2, 3)]
    nxt = 4
    for i, length in enumerate(lengths):
        nxt = _add_path(edges, 0, i + 1, length, nxt)
    return Graph(nxt, edges)


def prism(l1: int, l2: int, l3: int) -> Graph:
    """Triangles ``0,1,2`` and ``3,4,5``; path ``i`` joins ``i`` to ``3 + i``."""
    lengths = (l1, l2, l3)
    if min(lengths) < 1:
        raise ValueError("prism paths need at least 1 edge")
    edges: list = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    nxt = 6
    for i, length in enumerate(lengths):
        nxt = _add_path(edges, i, 3 + i, length, nxt)
    return Graph(nxt, edges)


def is_long_prism_params(l1: int, l2: int, l3: int) -> bool:
    return max(l1, l2, l3) >= 2


def _spoke_set(hole_len: int, spokes: Iterable[int]) -> frozenset[int]:
    s = frozenset(spokes)
    if len(s) < 3:
        raise ValueError("a wheel hub needs at least 3 spokes")
    if any(not 0 <= x < hole_len for x in s):
        raise ValueError("spoke position outside the hole")
    return s


def wheel(hole_len: int, spokes: Iterable[int]) -> Graph:
    """Hole ``0..hole_len-1`` plus hub ``hole_len`` adjacent to the spoke positions."""
    if hole_len < 4:
        raise ValueError("a hole has length at least 4")
    s = _spoke_set(hole_len, spokes)
    edges = [(i, (i + 1) % hole_len) for i in range(hole_len)]
    edges += [(hole_len, x) for x in sorted(s)]
    return Graph(hole_len + 1, edges)


def is_broken_wheel_params(hole_len: int, spokes: Iterable[int]) -> bool:
    """True iff the spoke positions do not form one circular interval."""
    s = _spoke_set(hole_len, spokes)
    if len(s) == hole_len:
        return False
    # number of maximal arcs = number of spokes whose successor is not a spoke
    arcs = sum((x + 1) % hole_len not in s for x in s)
    return arcs > 1


def apex_pair(g: Graph) -> Graph:
    """``2K1 v G``: two new nonadjacent vertices ``n`` and ``n+1`` complete to G."""
    return complete_join(g, edgeless(2))


def forbidden_g2_minor(k: int) -> Graph:
    """Complement of ``K2 + C_{2k+1}``, built as ``2K1 v complement(C_{2k+1})``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return apex_pair(complement(cycle(2 * k + 1)))


def poljak_double_subdivision(g: Graph) -> Graph:
    """Replace each edge ``uv`` (in ``g.edges()`` order) by a path ``u-x-y-v``."""
    edges = []
    nxt = g.n
    for u, v in g.edges():
        x, y = nxt, nxt + 1
        nxt += 2
        edges += [(u, x), (x, y), (y, v)]
    return Graph(nxt, edges)


# -- seeded random graphs -------------------------------------------------------

def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi ``G(n, p)``: pairs ``u < v`` in lexicographic order, edge iff draw < p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)


def random_chordal(n: int, seed: int, p_new_component: float = 0.1) -> Graph:
    """Chordal graph whose natural order ``0..n-1`` is a perfect elimination ordering.

    Each new vertex attaches to a clique of earlier vertices, grown greedily from
    a random anchor; with probability ``p_new_component`` it starts isolated.
    """
    rng = SplitMix64(seed)
    masks = [0] * n
    for v in range(1, n):
        if rng.random() < p_new_component:
            continue
        anchor = rng.below(v)
        clique = 1 << anchor
        candidates = list(bits(masks[anchor]))
        rng.shuffle(candidates)
        for u in candidates:
            if rng.random() < 0.5 and clique & ~masks[u] == 0:
                clique |= 1 << u
        masks[v] = clique
        for u in bits(clique):
            masks[u] |= 1 << v
    g = Graph._trusted(masks)
    assert all(is_clique_mask(g, masks[v] & ((1 << v) - 1)) for v in range(n))
    return g


def random_g2_sample(n: int, p: float, seed: int, budget: int = 1000) -> Graph | None:
    """Rejection-sample ``G(n, p)`` until a member of G_2 appears; ``None`` if the budget runs out."""
    from .membership import gk_membership

    stream = SplitMix64(seed)
    for _ in range(budget):
        g = random_graph(n, p, stream.next_u64())
        if gk_membership(g, 2).in_class:
            return g
    return None


def _random_atom(rng: SplitMix64, room: int) -> Graph:
    """A complete prism, hole or clique with at most ``room`` vertices (room >= 1)."""
    kinds = ["complete"]
    if room >= 4:
        kinds.append("cycle")
    if room >= 6:
        kinds.append("prism")
    kind = rng.choice(kinds)
    if kind == "prism":
        return short_n_prism(rng.randint(3, min(6, room // 2)))
    if kind == "cycle":
        return cycle(rng.randint(4, min(9, room)))
    return complete(rng.randint(1, min(5, room)))


def random_dfg2_gluing(n_max: int, seed: int, p_disjoint: float = 0.05) -> Graph:
    """Random diamond-free member of G_2 with exactly ``n_max`` vertices.

    Complete prisms, holes and cliques are glued one at a time along a vertex
    or an edge (or placed disjointly), then the labels are shuffled. An edge is
    only shared when it lies in no triangle on one of the two sides, since two
    triangles on a common edge would form a diamond.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    rng = SplitMix64(seed)
    g = _random_atom(rng, n_max)
    while True:
        room = n_max - g.n
        if room < 1:
            break
        if rng.random() < p_disjoint or g.m == 0:
            h = _random_atom(rng, room)
            g, _ = glue_along_clique(g, (), h, ())
            continue
        h = _random_atom(rng, room + 2)
        share = 2 if h.m and rng.random() < 0.5 else 1
        if share == 2:
            u, v = rng.choice(g.edges())
            a, b = rng.choice(h.edges())
            if g.masks[u] & g.masks[v] and h.masks[a] & h.masks[b]:
                share = 1
            elif h.n - 2 > room:
                share = 1
        if share == 1:
            if h.n - 1 > room:
                h = _random_atom(rng, room + 1)
            if h.n == 1:
                h = complete(2)
            u, a = rng.below(g.n), rng.below(h.n)
            g, _ = glue_along_clique(g, (u,), h, (a,))
        else:
            f = {u: a, v: b} if rng.random() < 0.5 else {u: b, v: a}
            g, _ = glue_along_clique(g, (u, v), h, (a, b), f)
    return relabel(g, rng.permutation(g.n))
