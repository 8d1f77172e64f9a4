"""Deciding membership in G_k: every minimal separator is a union of k cliques."""
from __future__ import annotations

from dataclasses import dataclass, field

from .cover import CliqueCover, clique_cover_number, k_simplicial_cover
from .graph import Graph, bits, to_set
from .separators import DEFAULT_CAP, SeparatorRecord, iter_minimal_separator_masks, witness_pair


@dataclass
class MembershipVerdict:
    k: int
    in_class: bool
    witness: SeparatorRecord | None = None
    covers: list[CliqueCover] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.in_class


def gk_membership(g: Graph, k: int, cap: int | None = DEFAULT_CAP, collect_covers: bool = False) -> MembershipVerdict:
    """Stream the minimal separators and stop at the first one needing more than k cliques.

    Raises :class:`~gksep.errors.CapExceeded` instead of guessing when the
    enumeration cap is hit.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    covers = []
    for s in iter_minimal_separator_masks(g, cap):
        cover = k_simplicial_cover(g, bits(s), k)
        if cover is None:
            return MembershipVerdict(k, False, SeparatorRecord(to_set(s), witness_pair(g, s)))
        if collect_covers:
            covers.append(cover)
    return MembershipVerdict(k, True, covers=covers)


def separator_profile(g: Graph, cap: int | None = DEFAULT_CAP) -> int:
    """Least k with ``g`` in G_k (0 when there are no separators)."""
    return max((clique_cover_number(g, bits(s)) for s in iter_minimal_separator_masks(g, cap)), default=0)
