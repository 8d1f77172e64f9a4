"""Clique-cutset decomposition into atoms.

Connected graphs are handled with a minimal elimination ordering (MCS-M): the
vertices at which the MCS-M weight fails to increase generate the minimal
separators of the resulting minimal triangulation, and those generators whose
separator is a clique of G are peeled off in elimination order. Disconnected
graphs are first split along the empty clique-cutset.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .graph import (
    CutPartition,
    Graph,
    bits,
    component_masks,
    component_of,
    glue_along_clique,
    is_clique_mask,
    relabel,
    to_mask,
    to_set,
)


@dataclass(frozen=True)
class Atom:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class Split:
    """Node graph = left glued to right along ``cutset``; ``side`` is the A-part of the cut."""

    cutset: frozenset[int]
    side: frozenset[int]
    left: "DecompositionTree"
    right: "DecompositionTree"


DecompositionTree = Union[Atom, Split]


def tree_vertices(tree: DecompositionTree) -> frozenset[int]:
    if isinstance(tree, Atom):
        return tree.vertices
    return tree_vertices(tree.left) | tree_vertices(tree.right)


def iter_atoms(tree: DecompositionTree) -> Iterator[Atom]:
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            yield node
        else:
            stack.append(node.right)
            stack.append(node.left)


def mcs_m(g: Graph, within: int) -> tuple[list[int], list[int], set[int]]:
    """MCS-M on ``G[within]``.

    Returns the elimination order (first eliminated first), the higher
    neighbourhoods ``madj`` in the minimal triangulation, and the set of
    separator generators.
    """
    masks = g.masks
    count = within.bit_count()
    weight = {v: 0 for v in bits(within)}
    by_weight: dict[int, int] = {0: within}
    maxw = 0
    unnumbered = within
    madj = [0] * g.n
    order = [0] * count
    generators: set[int] = set()
    prev = -1
    for i in range(count - 1, -1, -1):
        while not by_weight.get(maxw):
            maxw -= 1
        cls = by_weight[maxw]
        low = cls & -cls
        v = low.bit_length() - 1
        if maxw <= prev:
            generators.add(v)
        prev = maxw
        by_weight[maxw] = cls ^ low
        unnumbered ^= low
        order[i] = v

        # unnumbered u is reached when some v-u path has all inner weights < weight(u)
        reached = 0
        region = low
        nbr = masks[v] & unnumbered
        allowed = 0
        for t in sorted(w for w, m in by_weight.items() if m):
            cls_t = by_weight[t]
            reached |= nbr & cls_t
            allowed |= cls_t
            new = nbr & allowed & ~region
            while new:
                region |= new
                grow = 0
                for u in bits(new):
                    grow |= masks[u]
                nbr |= grow & unnumbered
                new = nbr & allowed & ~region
        for u in bits(reached):
            w = weight[u]
            weight[u] = w + 1
            by_weight[w] &= ~(1 << u)
            by_weight[w + 1] = by_weight.get(w + 1, 0) | (1 << u)
            if w + 1 > maxw:
                maxw = w + 1
            madj[u] |= low
    return order, madj, generators


def _clique_splits(g: Graph, within: int) -> tuple[list[tuple[int, int]], int]:
    """Peel clique minimal separators off the connected graph ``G[within]``.

    Returns ``[(S, C), ...]`` with ``C`` the removed component for separator
    ``S``, plus the vertex mask of the final atom.
    """
    order, madj, generators = mcs_m(g, within)
    rest = within
    splits = []
    for x in order:
        if x not in generators:
            continue
        s = madj[x]
        if s & ~rest or not is_clique_mask(g, s):
            continue
        comp = component_of(g, x, rest & ~s)
        if rest & ~s & ~comp:
            splits.append((s, comp))
            rest &= ~comp
    return splits, rest


def _atom(g: Graph, mask: int) -> Atom:
    edges = frozenset((u, v) for u in bits(mask) for v in bits(g.masks[u] & mask) if u < v)
    return Atom(to_set(mask), edges)


def _decompose_connected(g: Graph, within: int) -> DecompositionTree:
    splits, rest = _clique_splits(g, within)
    tree: DecompositionTree = _atom(g, rest)
    for s, comp in reversed(splits):
        tree = Split(to_set(s), to_set(comp), _atom(g, s | comp), tree)
    return tree


def decompose(g: Graph) -> DecompositionTree:
    if g.n == 0:
        return Atom(frozenset(), frozenset())
    comps = component_masks(g, g.full_mask)
    tree = _decompose_connected(g, comps[-1])
    for comp in reversed(comps[:-1]):
        tree = Split(frozenset(), to_set(comp), _decompose_connected(g, comp), tree)
    return tree


def find_clique_cutset(g: Graph) -> CutPartition | None:
    """Some cut-partition ``(A, B, C)`` with C a clique, or ``None`` if G has no clique-cutset."""
    comps = component_masks(g, g.full_mask)
    if len(comps) > 1:
        return CutPartition(to_set(comps[0]), to_set(g.full_mask & ~comps[0]), frozenset())
    if g.n == 0:
        return None
    splits, _ = _clique_splits(g, g.full_mask)
    if not splits:
        return None
    s, comp = splits[0]
    return CutPartition(to_set(comp), to_set(g.full_mask & ~s & ~comp), to_set(s))


def _reglue(tree: DecompositionTree) -> tuple[Graph, list[int]]:
    if isinstance(tree, Atom):
        labels = sorted(tree.vertices)
        pos = {v: i for i, v in enumerate(labels)}
        return Graph(len(labels), ((pos[u], pos[v]) for u, v in tree.edges)), labels
    gl, ll = _reglue(tree.left)
    gr, lr = _reglue(tree.right)
    pos_l = {v: i for i, v in enumerate(ll)}
    pos_r = {v: i for i, v in enumerate(lr)}
    try:
        f = {pos_l[c]: pos_r[c] for c in tree.cutset}
    except KeyError as exc:
        raise ValueError(f"cutset vertex {exc.args[0]} missing from a child") from None
    glued, index = glue_along_clique(gl, f.keys(), gr, f.values(), f)
    labels = ll + [0] * (glued.n - gl.n)
    for v, nv in index.items():
        if nv >= gl.n:
            labels[nv] = lr[v]
    return glued, labels


def reglue(tree: DecompositionTree) -> Graph:
    """Rebuild the labelled graph by gluing the tree bottom-up."""
    glued, labels = _reglue(tree)
    if sorted(labels) != list(range(glued.n)):
        raise ValueError("tree vertices are not 0..n-1")
    return relabel(glued, labels)


def tree_to_dict(tree: DecompositionTree) -> dict:
    if isinstance(tree, Atom):
        return {"atom": sorted(tree.vertices)}
    return {
        "cutset": sorted(tree.cutset),
        "side": sorted(tree.side),
        "left": tree_to_dict(tree.left),
        "right": tree_to_dict(tree.right),
    }
