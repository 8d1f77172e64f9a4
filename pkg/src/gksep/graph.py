"""Immutable simple graphs over vertices ``0..n-1``.

Adjacency is stored as one Python ``int`` bitmask per vertex, so neighbourhood
algebra (unions, intersections, component search) runs on machine words.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


class Graph:
    """A finite simple undirected graph with vertex set ``range(n)``."""

    __slots__ = ("n", "masks", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.masks: tuple[int, ...] = tuple(masks)
        self._hash = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build from adjacency bitmasks, validating symmetry and loops."""
        n = len(masks)
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full:
                raise IndexError(f"neighbour of {v} out of range")
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(m):
                if not masks[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        return cls._trusted(masks)

    @classmethod
    def _trusted(cls, masks: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(masks)
        g.masks = tuple(masks)
        g._hash = None
        return g

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def adj(self) -> list[frozenset[int]]:
        return [to_set(m) for m in self.masks]

    @property
    def m(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return to_set(self.masks[v])

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.masks[u] >> (u + 1) << (u + 1))]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.masks == other.masks and self.n == other.n

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.masks))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class CutPartition:
    """A partition ``(A, B, C)`` of V(G) with A, B nonempty and anticomplete."""

    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]

    def validate(self, g: Graph) -> None:
        a, b, c = to_mask(self.A), to_mask(self.B), to_mask(self.C)
        if not a or not b:
            raise ValueError("cut-partition sides must be nonempty")
        if a & b or a & c or b & c or (a | b | c) != g.full_mask:
            raise ValueError("A, B, C do not partition V(G)")
        if neighborhood_mask(g, a) & b:
            raise ValueError("A and B are not anticomplete")


def validate_weights(g: Graph, weights: Sequence[int] | None) -> list[int]:
    """Return a weight list for ``g``; ``None`` means unit weights."""
    if weights is None:
        return [1] * g.n
    w = [int(x) for x in weights]
    if len(w) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(w)}")
    if any(x < 0 for x in w):
        raise ValueError("weights must be nonnegative")
    return w


# -- mask helpers used throughout the package ---------------------------------

def neighborhood_mask(g: Graph, mask: int) -> int:
    """Open neighbourhood N(X) of the vertex set ``mask``."""
    out = 0
    masks = g.masks
    for v in bits(mask):
        out |= masks[v]
    return out & ~mask


def component_masks(g: Graph, within: int) -> list[int]:
    """Connected components of ``G[within]`` as bitmasks, ordered by minimum vertex."""
    masks = g.masks
    comps = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= masks[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def component_of(g: Graph, v: int, within: int) -> int:
    masks = g.masks
    comp = frontier = 1 << v
    while frontier:
        grow = 0
        for u in bits(frontier):
            grow |= masks[u]
        frontier = grow & within & ~comp
        comp |= frontier
    return comp


def is_connected_mask(g: Graph, mask: int) -> bool:
    if not mask:
        return False
    return component_of(g, (mask & -mask).bit_length() - 1, mask) == mask


def is_clique_mask(g: Graph, mask: int) -> bool:
    masks = g.masks
    for v in bits(mask):
        if mask & ~masks[v] & ~(1 << v):
            return False
    return True


# -- elementary constructions ---------------------------------------------------

def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[X]`` relabelled in increasing order, plus the old->new index map."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(keep)}
    sel = to_mask(keep)
    masks = []
    for v in keep:
        masks.append(to_mask(index[u] for u in bits(g.masks[v] & sel)))
    return Graph._trusted(masks), index


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._trusted([full & ~m & ~(1 << v) for v, m in enumerate(g.masks)])


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract edge ``uv``; the merged vertex takes index ``min(u, v)``.

    Vertices above ``max(u, v)`` shift down by one.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"{u}{v} is not an edge")
    keep, drop = min(u, v), max(u, v)

    def relabel(mask: int) -> int:
        if mask >> drop & 1:
            mask = (mask & ~(1 << drop)) | (1 << keep)
        low = mask & ((1 << drop) - 1)
        return low | (mask >> (drop + 1) << drop)

    masks = []
    for w in range(g.n):
        if w == drop:
            continue
        if w == keep:
            merged = (g.masks[u] | g.masks[v]) & ~(1 << u) & ~(1 << v)
            masks.append(relabel(merged))
        else:
            masks.append(relabel(g.masks[w]))
    return Graph._trusted(masks)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph._trusted(list(g1.masks) + [m << shift for m in g2.masks])


def complete_join(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    left = g1.full_mask
    right = g2.full_mask << shift
    masks = [m | right for m in g1.masks] + [(m << shift) | left for m in g2.masks]
    return Graph._trusted(masks)


def glue_along_clique(
    g1: Graph,
    c1: Iterable[int],
    g2: Graph,
    c2: Iterable[int],
    f: Mapping[int, int] | None = None,
) -> tuple[Graph, dict[int, int]]:
    """Glue ``g2`` onto ``g1`` by identifying clique ``c1`` with clique ``c2``.

    ``f`` maps ``c1`` bijectively onto ``c2``; when omitted the two cliques are
    matched in sorted order. Vertices of ``g1`` keep their labels; the returned
    dict maps each vertex of ``g2`` to its label in the result.
    """
    c1 = sorted(set(c1))
    c2 = sorted(set(c2))
    if len(c1) != len(c2):
        raise ValueError("glued cliques differ in size")
    if not is_clique_mask(g1, to_mask(c1)) or not is_clique_mask(g2, to_mask(c2)):
        raise ValueError("gluing sets must be cliques")
    if f is None:
        f = dict(zip(c1, c2))
    if sorted(f) != c1 or sorted(f.values()) != c2:
        raise ValueError("f is not a bijection from c1 to c2")
    inverse = {b: a for a, b in f.items()}
    index: dict[int, int] = {}
    nxt = g1.n
    for v in range(g2.n):
        if v in inverse:
            index[v] = inverse[v]
        else:
            index[v] = nxt
            nxt += 1
    masks = list(g1.masks) + [0] * (nxt - g1.n)
    for v in range(g2.n):
        nv = index[v]
        masks[nv] |= to_mask(index[u] for u in bits(g2.masks[v]))
    return Graph._trusted(masks), index


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of V(G)")
    masks = [0] * g.n
    for v, m in enumerate(g.masks):
        masks[perm[v]] = to_mask(perm[u] for u in bits(m))
    return Graph._trusted(masks)


def components(g: Graph) -> list[frozenset[int]]:
    return [to_set(c) for c in component_masks(g, g.full_mask)]


def anticomponents(g: Graph) -> list[frozenset[int]]:
    return components(complement(g))


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    return is_clique_mask(g, to_mask(vertices))


def is_stable(g: Graph, vertices: Iterable[int]) -> bool:
    mask = to_mask(vertices)
    return all(not (g.masks[v] & mask) for v in bits(mask))


def is_diamond_free(g: Graph) -> bool:
    """True iff every neighbourhood induces a disjoint union of cliques."""
    masks = g.masks
    for v in range(g.n):
        nv = masks[v]
        for u in bits(nv):
            cluster = (masks[u] | (1 << u)) & nv
            for w in bits(cluster):
                if (masks[w] | (1 << w)) & nv != cluster:
                    return False
    return True
