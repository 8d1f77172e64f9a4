"""Minimal separators and minimal cutsets.

Enumeration grows the family of minimal separators from the separators close
to each vertex: ``N(C)`` for every component ``C`` of ``G - N[v]``, then
repeatedly ``N(C)`` for every component ``C`` of ``G - (S u N(x))`` with ``x`` in
an already known separator ``S``. Every set produced this way has two full
components, and every minimal separator is reached.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapExceeded
from .graph import (
    CutPartition,
    Graph,
    bits,
    component_masks,
    component_of,
    neighborhood_mask,
    to_mask,
    to_set,
)

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class SeparatorRecord:
    """A minimal separator with one nonadjacent pair it minimally separates."""

    S: frozenset[int]
    witness_pair: tuple[int, int]

    def validate(self, g: Graph) -> None:
        a, b = self.witness_pair
        if not is_minimal_ab_separator(g, a, b, self.S):
            raise ValueError(f"{sorted(self.S)} is not a minimal ({a},{b})-separator")


def _check_pair(g: Graph, a: int, b: int, s_mask: int) -> None:
    if a == b:
        raise ValueError("a and b must be distinct")
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise IndexError("vertex out of range")
    if g.has_edge(a, b):
        raise ValueError(f"{a} and {b} are adjacent")
    if s_mask >> a & 1 or s_mask >> b & 1:
        raise ValueError("a and b must lie outside S")


def is_separator(g: Graph, a: int, b: int, s: Iterable[int]) -> bool:
    s_mask = to_mask(s)
    _check_pair(g, a, b, s_mask)
    return not component_of(g, a, g.full_mask & ~s_mask) >> b & 1


def is_minimal_ab_separator(g: Graph, a: int, b: int, s: Iterable[int]) -> bool:
    """Separation plus the certificate: every vertex of S sees both the a- and b-components."""
    s_mask = to_mask(s)
    _check_pair(g, a, b, s_mask)
    rest = g.full_mask & ~s_mask
    ca = component_of(g, a, rest)
    if ca >> b & 1:
        return False
    cb = component_of(g, b, rest)
    return neighborhood_mask(g, ca) == s_mask and neighborhood_mask(g, cb) == s_mask


def full_components(g: Graph, s_mask: int) -> list[int]:
    """Components ``C`` of ``G - S`` with ``N(C) = S``."""
    return [c for c in component_masks(g, g.full_mask & ~s_mask) if neighborhood_mask(g, c) == s_mask]


def is_minimal_separator(g: Graph, s: Iterable[int]) -> bool:
    return len(full_components(g, to_mask(s))) >= 2


def witness_pair(g: Graph, s_mask: int) -> tuple[int, int]:
    """Smallest vertices of the first two full components of ``G - S``."""
    fulls = full_components(g, s_mask)
    if len(fulls) < 2:
        raise ValueError("not a minimal separator")
    a = (fulls[0] & -fulls[0]).bit_length() - 1
    b = (fulls[1] & -fulls[1]).bit_length() - 1
    return a, b


def iter_minimal_separator_masks(g: Graph, cap: int | None = DEFAULT_CAP) -> Iterator[int]:
    """Stream every minimal separator of ``g`` once, as a bitmask, in a fixed order."""
    masks = g.masks
    full = g.full_mask
    seen: set[int] = set()
    queue: deque[int] = deque()

    def emit(s: int) -> bool:
        if s in seen:
            return False
        if cap is not None and len(seen) >= cap:
            raise CapExceeded(cap, partial=[to_set(x) for x in seen])
        seen.add(s)
        queue.append(s)
        return True

    for v in range(g.n):
        for comp in component_masks(g, full & ~(masks[v] | (1 << v))):
            s = neighborhood_mask(g, comp)
            if emit(s):
                yield s
    while queue:
        s = queue.popleft()
        for x in bits(s):
            for comp in component_masks(g, full & ~(s | masks[x])):
                t = neighborhood_mask(g, comp)
                if emit(t):
                    yield t


def _canonical(sets: Iterable[int]) -> list[frozenset[int]]:
    return sorted((to_set(m) for m in sets), key=lambda s: (len(s), sorted(s)))


def all_minimal_separators(g: Graph, cap: int | None = DEFAULT_CAP) -> list[frozenset[int]]:
    """All minimal separators, sorted by size then lexicographically.

    Raises :class:`CapExceeded` (carrying the partial family) when more than
    ``cap`` separators exist.
    """
    return _canonical(iter_minimal_separator_masks(g, cap))


def minimal_ab_separators(g: Graph, a: int, b: int, cap: int | None = DEFAULT_CAP) -> list[frozenset[int]]:
    """Exactly the minimal (a,b)-separators: minimal separators with a, b in distinct full components."""
    _check_pair(g, a, b, 0)
    out = []
    for s in iter_minimal_separator_masks(g, cap):
        if s >> a & 1 or s >> b & 1:
            continue
        rest = g.full_mask & ~s
        ca = component_of(g, a, rest)
        if ca >> b & 1 or neighborhood_mask(g, ca) != s:
            continue
        if neighborhood_mask(g, component_of(g, b, rest)) == s:
            out.append(s)
    return _canonical(out)


def separator_records(g: Graph, cap: int | None = DEFAULT_CAP) -> Iterator[SeparatorRecord]:
    for s in iter_minimal_separator_masks(g, cap):
        yield SeparatorRecord(to_set(s), witness_pair(g, s))


def minimal_cutsets(g: Graph, cap: int | None = DEFAULT_CAP) -> list[frozenset[int]]:
    """Minimal cutsets: the minimal separators all of whose components are full."""
    out = []
    for s in iter_minimal_separator_masks(g, cap):
        comps = component_masks(g, g.full_mask & ~s)
        if all(neighborhood_mask(g, c) == s for c in comps):
            out.append(s)
    return _canonical(out)


def cut_partition_for(g: Graph, c: Iterable[int]) -> CutPartition:
    """A cut-partition ``(A, B, C)`` with A the component of ``G - C`` holding its smallest vertex."""
    c_mask = to_mask(c)
    if c_mask & ~g.full_mask:
        raise IndexError("cutset vertex out of range")
    comps = component_masks(g, g.full_mask & ~c_mask)
    if len(comps) < 2:
        raise ValueError(f"{sorted(to_set(c_mask))} is not a cutset")
    a = comps[0]
    b = g.full_mask & ~c_mask & ~a
    return CutPartition(to_set(a), to_set(b), to_set(c_mask))
