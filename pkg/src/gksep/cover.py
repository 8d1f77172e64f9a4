"""Clique covers of vertex sets, i.e. colourings of the complement of ``G[S]``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, bits, is_clique_mask, to_mask, to_set


@dataclass(frozen=True)
class CliqueCover:
    parts: tuple[frozenset[int], ...]

    @property
    def covered(self) -> frozenset[int]:
        return frozenset().union(*self.parts)

    def validate(self, g: Graph, target: Iterable[int] | None = None) -> None:
        seen = 0
        for part in self.parts:
            mask = to_mask(part)
            if mask & seen:
                raise ValueError("cover parts overlap")
            if not is_clique_mask(g, mask):
                raise ValueError(f"part {sorted(part)} is not a clique")
            seen |= mask
        if target is not None and seen != to_mask(target):
            raise ValueError("cover does not match the target set")


def _anti_adjacency(g: Graph, s_mask: int) -> dict[int, int]:
    """Complement adjacency restricted to S."""
    return {v: s_mask & ~g.masks[v] & ~(1 << v) for v in bits(s_mask)}


def _cover_from_colors(colors: dict[int, int]) -> CliqueCover:
    k = max(colors.values(), default=-1) + 1
    parts = [0] * k
    for v, c in colors.items():
        parts[c] |= 1 << v
    return CliqueCover(tuple(to_set(p) for p in parts))


def _two_color(anti: dict[int, int]) -> dict[int, int] | None:
    """Lexicographically least proper 2-colouring of the anti-graph, or ``None``."""
    colors: dict[int, int] = {}
    for root in sorted(anti):
        if root in colors:
            continue
        colors[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            cv = colors[v]
            for u in bits(anti[v]):
                cu = colors.get(u)
                if cu is None:
                    colors[u] = 1 - cv
                    stack.append(u)
                elif cu == cv:
                    return None
    return colors


def _k_color(anti: dict[int, int], k: int) -> dict[int, int] | None:
    """Lexicographically least proper k-colouring by backtracking in vertex order."""
    order = sorted(anti)
    colors: dict[int, int] = {}
    color_masks = [0] * k

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in range(min(k, used + 1)):
            if color_masks[c] & anti[v]:
                continue
            colors[v] = c
            color_masks[c] |= 1 << v
            if place(i + 1, max(used, c + 1)):
                return True
            color_masks[c] &= ~(1 << v)
            del colors[v]
        return False

    return colors if place(0, 0) else None


def _color(g: Graph, s_mask: int, k: int) -> dict[int, int] | None:
    if k < 0:
        return None
    if not s_mask:
        return {}
    if k == 0:
        return None
    if k == 1:
        return {v: 0 for v in bits(s_mask)} if is_clique_mask(g, s_mask) else None
    anti = _anti_adjacency(g, s_mask)
    if k == 2:
        return _two_color(anti)
    return _k_color(anti, k)


def k_simplicial_cover(g: Graph, s: Iterable[int], k: int) -> CliqueCover | None:
    """Partition S into at most ``k`` cliques of G, or ``None`` if impossible."""
    colors = _color(g, to_mask(s), k)
    return None if colors is None else _cover_from_colors(colors)


def has_k_cover_mask(g: Graph, s_mask: int, k: int) -> bool:
    return _color(g, s_mask, k) is not None


def _greedy_clique_lower_bound(anti: dict[int, int]) -> int:
    best = 0
    for v in anti:
        clique = 1 << v
        cand = anti[v]
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique |= 1 << u
            cand &= anti[u]
        best = max(best, clique.bit_count())
    return best


def clique_cover_number(g: Graph, s: Iterable[int]) -> int:
    """Least k such that S is a union of k cliques of G."""
    s_mask = to_mask(s)
    if not s_mask:
        return 0
    if is_clique_mask(g, s_mask):
        return 1
    anti = _anti_adjacency(g, s_mask)
    if _two_color(anti) is not None:
        return 2
    k = max(3, _greedy_clique_lower_bound(anti))
    while _k_color(anti, k) is None:
        k += 1
    return k


def is_k_simplicial_vertex(g: Graph, v: int, k: int) -> CliqueCover | None:
    return k_simplicial_cover(g, bits(g.masks[v]), k)
