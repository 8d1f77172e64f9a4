"""Lexicographic BFS and k-simplicial elimination orderings.

Orderings are read prefix-wise: ``v_1, ..., v_n`` is a k-simplicial elimination
ordering when each ``v_i`` is k-simplicial in ``G[v_1, ..., v_i]``. A LexBFS
visiting order is consumed in exactly this orientation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cover import CliqueCover, has_k_cover_mask, k_simplicial_cover
from .graph import Graph, bits


@dataclass(frozen=True)
class Ordering:
    seq: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.seq[0]

    def __iter__(self):
        return iter(self.seq)

    def __len__(self) -> int:
        return len(self.seq)


def lexbfs(g: Graph, s: int = 0) -> Ordering:
    """LexBFS by partition refinement; ties go to the smallest vertex index."""
    if g.n == 0:
        raise ValueError("LexBFS needs a nonnull graph")
    if not 0 <= s < g.n:
        raise IndexError(f"start vertex {s} out of range")
    masks = g.masks
    classes = [1 << s, g.full_mask & ~(1 << s)]
    seq = []
    while classes:
        first = classes[0]
        low = first & -first
        v = low.bit_length() - 1
        seq.append(v)
        nv = masks[v]
        refined = []
        for i, c in enumerate(classes):
            if i == 0:
                c &= ~low
            inside = c & nv
            outside = c & ~nv
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        classes = refined
    return Ordering(tuple(seq))


def _check_permutation(g: Graph, order: Sequence[int]) -> None:
    if sorted(order) != list(range(g.n)):
        raise ValueError("ordering is not a permutation of V(G)")


def first_violation(g: Graph, order: Sequence[int], k: int) -> int | None:
    """Index of the first prefix whose last vertex is not k-simplicial, or ``None``."""
    order = list(order)
    _check_permutation(g, order)
    prefix = 0
    for i, v in enumerate(order):
        if not has_k_cover_mask(g, g.masks[v] & prefix, k):
            return i
        prefix |= 1 << v
    return None


def is_k_simplicial_elimination_ordering(g: Graph, order: Sequence[int], k: int) -> bool:
    return first_violation(g, order, k) is None


def is_chordal(g: Graph) -> bool:
    if g.n == 0:
        return True
    return first_violation(g, lexbfs(g, 0).seq, 1) is None


def find_k_simplicial_vertex(g: Graph, k: int) -> tuple[int, CliqueCover] | None:
    """A k-simplicial vertex with its cover; tries the last LexBFS vertex first."""
    if g.n == 0:
        raise ValueError("null graph has no vertices")
    last = lexbfs(g, 0).seq[-1]
    for v in [last] + [u for u in range(g.n) if u != last]:
        cover = k_simplicial_cover(g, bits(g.masks[v]), k)
        if cover is not None:
            return v, cover
    return None
