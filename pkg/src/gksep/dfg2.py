"""Diamond-free graphs in G_2: recognition and solvers over the clique-cutset decomposition.

Such graphs without a clique-cutset are complete prisms, cycles, or complete
graphs, so every problem reduces to those three atom shapes plus gluing.
Atoms of any other shape (only reachable in non-strict mode) fall back to the
exhaustive solvers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .decomposition import Atom, DecompositionTree, Split, decompose, iter_atoms
from .errors import NotInClassError
from .graph import Graph, bits, component_masks, induced_subgraph, is_clique_mask, is_diamond_free, to_mask, validate_weights
from .solvers import SolveResult, chromatic_number, mwc_bruteforce, mwss_gk_smallscale

COMPLETE, CYCLE, PRISM, OTHER = "complete", "cycle", "prism", "other"
PROBLEMS = ("mwc", "mwss", "color")


@dataclass(frozen=True)
class AtomClass:
    """``witness``: complete -> sorted vertices; cycle -> cyclic order;
    prism -> ``(A, B)`` with ``A[i]`` matched to ``B[i]``; other -> sorted vertices."""

    kind: str
    size: int
    witness: tuple

    def validate(self, g: Graph) -> None:
        if self.kind == PRISM:
            a, b = self.witness
            if len(a) != self.size or len(b) != self.size or set(a) & set(b):
                raise ValueError("prism witness has wrong shape")
            for i in range(self.size):
                for j in range(self.size):
                    if i != j and not (g.has_edge(a[i], a[j]) and g.has_edge(b[i], b[j])):
                        raise ValueError("prism side is not a clique")
                    if g.has_edge(a[i], b[j]) != (i == j):
                        raise ValueError("prism matching is wrong")
        elif self.kind == CYCLE:
            order = self.witness
            inside = to_mask(order)
            for i, v in enumerate(order):
                if (g.masks[v] & inside).bit_count() != 2 or not g.has_edge(v, order[i - 1]):
                    raise ValueError("cycle witness is not a hole")
        elif self.kind == COMPLETE:
            if not is_clique_mask(g, to_mask(self.witness)):
                raise ValueError("complete witness is not a clique")


def classify_atom(h: Graph) -> AtomClass:
    """Classify a connected graph as a complete graph, a hole, a complete prism, or other."""
    n = h.n
    if n and len(component_masks(h, h.full_mask)) > 1:
        raise ValueError("classify_atom needs a connected graph")
    degrees = [h.degree(v) for v in range(n)]
    if all(d == n - 1 for d in degrees):
        return AtomClass(COMPLETE, n, tuple(range(n)))
    if n >= 4 and all(d == 2 for d in degrees):
        order = [0]
        prev, cur = -1, 0
        while True:
            first, second = bits(h.masks[cur])
            nxt = second if first == prev else first
            if nxt == 0:
                break
            order.append(nxt)
            prev, cur = cur, nxt
        if len(order) != n:
            return AtomClass(OTHER, n, tuple(range(n)))
        return AtomClass(CYCLE, n, tuple(order))
    k = n // 2
    if n % 2 == 0 and k >= 3 and all(d == k for d in degrees):
        nbr = h.masks[0]
        parts = sorted(component_masks(h, nbr), key=lambda m: m.bit_count())
        if len(parts) == 2 and parts[0].bit_count() == 1 and parts[1].bit_count() == k - 1 and is_clique_mask(h, parts[1]):
            a_mask = parts[1] | 1
            b_mask = h.full_mask & ~a_mask
            if b_mask.bit_count() == k and is_clique_mask(h, b_mask) and is_clique_mask(h, a_mask):
                a = sorted(bits(a_mask))
                # each side vertex has k-1 clique neighbours, so exactly one across
                b = [(h.masks[x] & b_mask).bit_length() - 1 for x in a]
                if all((h.masks[x] & b_mask).bit_count() == 1 for x in a) and len(set(b)) == k:
                    return AtomClass(PRISM, k, (tuple(a), tuple(b)))
    return AtomClass(OTHER, n, tuple(range(n)))


@dataclass(frozen=True)
class Recognition:
    accepted: bool
    diamond_free: bool
    tree: DecompositionTree
    atoms: list[tuple[Atom, AtomClass]]

    def __bool__(self) -> bool:
        return self.accepted


def _classify_in_place(g: Graph, atom: Atom) -> AtomClass:
    """Classify ``G[atom]`` and translate the witness back to G's labels."""
    if not atom.vertices:
        return AtomClass(COMPLETE, 0, ())
    sub, index = induced_subgraph(g, atom.vertices)
    back = sorted(index, key=index.get)
    cls = classify_atom(sub)
    if cls.kind == PRISM:
        a, b = cls.witness
        return AtomClass(PRISM, cls.size, (tuple(back[x] for x in a), tuple(back[x] for x in b)))
    return AtomClass(cls.kind, cls.size, tuple(back[x] for x in cls.witness))


def recognize_dfg2(g: Graph) -> Recognition:
    diamond_free = is_diamond_free(g)
    tree = decompose(g)
    atoms = [(atom, _classify_in_place(g, atom)) for atom in iter_atoms(tree)]
    accepted = diamond_free and all(cls.kind != OTHER for _, cls in atoms)
    return Recognition(accepted, diamond_free, tree, atoms)


# -- atom-level solvers, in G's labels ----------------------------------------------

def _atom_mwc(g: Graph, w: list[int], cls: AtomClass, atom: Atom) -> tuple[int, int]:
    if cls.kind == COMPLETE:
        mask = to_mask(cls.witness)
        return sum(w[v] for v in cls.witness), mask
    if cls.kind == CYCLE:
        order = cls.witness
        return max(((w[order[i - 1]] + w[order[i]], (1 << order[i - 1]) | (1 << order[i])) for i in range(len(order))),
                   key=lambda t: t[0])
    if cls.kind == PRISM:
        a, b = cls.witness
        options = [(sum(w[x] for x in a), to_mask(a)), (sum(w[x] for x in b), to_mask(b))]
        options += [(w[x] + w[y], (1 << x) | (1 << y)) for x, y in zip(a, b)]
        return max(options, key=lambda t: t[0])
    sub, index = induced_subgraph(g, atom.vertices)
    back = sorted(index, key=index.get)
    res = mwc_bruteforce(sub, [w[v] for v in back])
    return res.value, to_mask(back[x] for x in res.certificate)


def _path_mwss(path: Sequence[int], w: list[int]) -> tuple[int, int]:
    take, skip = (0, 0), (0, 0)
    for v in path:
        take, skip = (skip[0] + w[v], skip[1] | (1 << v)), max(take, skip, key=lambda t: t[0])
    return max(take, skip, key=lambda t: t[0])


def _atom_mwss(g: Graph, w: list[int], cls: AtomClass, atom: Atom, removed: int = 0) -> tuple[int, int]:
    """Heaviest stable set of ``G[atom - removed]``."""
    live = to_mask(atom.vertices) & ~removed
    if not live:
        return 0, 0
    if cls.kind == COMPLETE:
        v = max(bits(live), key=lambda x: (w[x], -x))
        return w[v], 1 << v
    if cls.kind == CYCLE:
        order = cls.witness
        n = len(order)
        gone = [i for i in range(n) if not live >> order[i] & 1]
        if not gone:
            first = _path_mwss(order[1:], w)
            v0 = order[0]
            rest = _path_mwss(order[2:-1], w)
            second = (rest[0] + w[v0], rest[1] | (1 << v0))
            return max(first, second, key=lambda t: t[0])
        value, chosen = 0, 0
        start = gone[0]
        run: list[int] = []
        for step in range(1, n + 1):
            v = order[(start + step) % n]
            if live >> v & 1:
                run.append(v)
            elif run:
                pv, ps = _path_mwss(run, w)
                value, chosen = value + pv, chosen | ps
                run = []
        return value, chosen
    if cls.kind == PRISM:
        a, b = cls.witness
        best = max(((w[x], 1 << x) for x in bits(live)), key=lambda t: t[0])
        top_a = sorted((i for i in range(len(a)) if live >> a[i] & 1), key=lambda i: -w[a[i]])[:2]
        top_b = sorted((j for j in range(len(b)) if live >> b[j] & 1), key=lambda j: -w[b[j]])[:2]
        for i in top_a:
            for j in top_b:
                if i != j and w[a[i]] + w[b[j]] > best[0]:
                    best = (w[a[i]] + w[b[j]], (1 << a[i]) | (1 << b[j]))
        return best
    sub, index = induced_subgraph(g, bits(live))
    back = sorted(index, key=index.get)
    res = mwss_gk_smallscale(sub, [w[v] for v in back])
    return res.value, to_mask(back[x] for x in res.certificate)


def _atom_coloring(g: Graph, cls: AtomClass, atom: Atom) -> dict[int, int]:
    if cls.kind == COMPLETE:
        return {v: i for i, v in enumerate(cls.witness)}
    if cls.kind == CYCLE:
        order = cls.witness
        colors = {v: i % 2 for i, v in enumerate(order)}
        if len(order) % 2:
            colors[order[-1]] = 2
        return colors
    if cls.kind == PRISM:
        a, b = cls.witness
        k = len(a)
        colors = {x: i for i, x in enumerate(a)}
        colors.update({y: (i + 1) % k for i, y in enumerate(b)})
        return colors
    sub, index = induced_subgraph(g, atom.vertices)
    back = sorted(index, key=index.get)
    res = chromatic_number(sub)
    return {back[x]: c for x, c in res.certificate.items()}


# -- gluing ---------------------------------------------------------------------------

def _chain(tree: DecompositionTree) -> tuple[list[Split], DecompositionTree]:
    """The decomposition is a caterpillar; walk its right spine without recursion."""
    splits = []
    while isinstance(tree, Split):
        splits.append(tree)
        tree = tree.right
    return splits, tree


def _solve_mwc(g, w, classes, tree) -> tuple[int, int]:
    best = (-1, 0)
    for atom in iter_atoms(tree):
        cand = _atom_mwc(g, w, classes[atom], atom) if atom.vertices else (0, 0)
        if cand[0] > best[0]:
            best = cand
    return best


def _solve_color(g, classes, tree) -> dict[int, int]:
    splits, last = _chain(tree)
    colors = _atom_coloring(g, classes[last], last) if last.vertices else {}
    for split in reversed(splits):
        left = split.left
        if isinstance(left, Atom):
            lc = _atom_coloring(g, classes[left], left)
        else:
            lc = _solve_color(g, classes, left)
        # permute the left colouring to agree with the right one on the shared clique
        perm = {lc[c]: colors[c] for c in split.cutset}
        taken = set(perm.values())
        free = (x for x in range(len(lc) + len(taken) + 1) if x not in taken)
        for c in sorted(set(lc.values())):
            if c not in perm:
                perm[c] = next(free)
        for v, c in lc.items():
            colors[v] = perm[c]
    return colors


def _solve_mwss(g, w, classes, tree) -> tuple[int, int]:
    w = list(w)
    splits, last = _chain(tree)
    # top-down: settle each side, fold it into weights on the cutset
    plans = []
    for split in splits:
        left = split.left
        if not split.cutset:
            plans.append((None, _solve_mwss(g, w, classes, left) if isinstance(left, Split) else
                          _atom_mwss(g, w, classes[left], left)))
            continue
        cmask = to_mask(split.cutset)
        base = _atom_mwss(g, w, classes[left], left, cmask)
        options = {}
        for c in sorted(split.cutset):
            val, chosen = _atom_mwss(g, w, classes[left], left, cmask | g.masks[c])
            gain = max(0, val + w[c] - base[0])
            options[c] = (val + w[c], chosen | (1 << c), gain)
        for c, opt in options.items():
            w[c] = opt[2]
        plans.append((options, base))
    value, chosen = _atom_mwss(g, w, classes[last], last) if last.vertices else (0, 0)
    # bottom-up: unfold the cutset weights again
    for split, (options, base) in zip(reversed(splits), reversed(plans)):
        if options is None:
            value, chosen = value + base[0], chosen | base[1]
            continue
        picked = [c for c in split.cutset if chosen >> c & 1]
        if picked and options[picked[0]][2] > 0:
            c = picked[0]
            value, chosen = value - options[c][2] + options[c][0], chosen | options[c][1]
        else:
            for c in picked:
                chosen &= ~(1 << c)
            value, chosen = value + base[0], chosen | base[1]
    return value, chosen


def solve_dfg2(g: Graph, weights: Sequence[int] | None = None, problem: str = "mwc", strict: bool = False,
               recognition: Recognition | None = None) -> SolveResult:
    """Solve ``problem`` (mwc, mwss or color) atom by atom.

    With ``strict`` a graph that is not a diamond-free G_2 member raises
    :class:`NotInClassError`; otherwise unrecognised atoms use exact
    exhaustive solvers, which are only practical for small atoms.
    """
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}; expected one of {PROBLEMS}")
    w = validate_weights(g, weights)
    rec = recognition if recognition is not None else recognize_dfg2(g)
    if strict and not rec.accepted:
        why = "contains a diamond" if not rec.diamond_free else "has an atom that is not a prism, cycle or clique"
        raise NotInClassError(f"graph {why}")
    classes = {atom: cls for atom, cls in rec.atoms}
    if problem == "mwc":
        if g.n == 0:
            return SolveResult(0, frozenset())
        value, chosen = _solve_mwc(g, w, classes, rec.tree)
        return SolveResult(value, frozenset(bits(chosen)))
    if problem == "mwss":
        value, chosen = _solve_mwss(g, w, classes, rec.tree)
        return SolveResult(value, frozenset(bits(chosen)))
    colors = _solve_color(g, classes, rec.tree)
    return SolveResult(len(set(colors.values())), dict(sorted(colors.items())))
