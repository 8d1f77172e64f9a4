"""DIMACS-style graph files.

Lines are ``c <comment>``, exactly one ``p edge <n> <m>`` header,
optional ``n <v> <w>`` weight lines (default weight 1) and ``e <u> <v>``
edges, all 1-based. Loops, repeated edges and out-of-range indices are errors.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph


class GraphFormatError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    weights: tuple[int, ...] = field(default=())
    name: str | None = None

    def __post_init__(self):
        if not self.weights:
            object.__setattr__(self, "weights", (1,) * self.graph.n)
        if len(self.weights) != self.graph.n:
            raise ValueError("weight vector length differs from vertex count")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")


def _columns(raw: str) -> list[tuple[int, str]]:
    out = []
    col = 0
    for tok in raw.split():
        col = raw.index(tok, col)
        out.append((col + 1, tok))
        col += len(tok)
    return out


def _int(lineno: int, col: int, tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(lineno, col, f"expected integer {what}, got {tok!r}") from None


def parse_graph(text: str) -> GraphDocument:
    n = None
    declared_m = 0
    name = None
    weights: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _columns(raw)
        if not toks:
            continue
        col, kind = toks[0]
        if kind == "c":
            comment = raw[raw.index("c") + 1:].strip()
            if comment.startswith("name:") and name is None:
                name = comment[5:].strip()
            continue
        if kind == "p":
            if n is not None:
                raise GraphFormatError(lineno, col, "second problem line")
            if len(toks) != 4 or toks[1][1] != "edge":
                raise GraphFormatError(lineno, col, "expected 'p edge <n> <m>'")
            n = _int(lineno, toks[2][0], toks[2][1], "vertex count")
            declared_m = _int(lineno, toks[3][0], toks[3][1], "edge count")
            if n < 0 or declared_m < 0:
                raise GraphFormatError(lineno, toks[2][0], "counts must be nonnegative")
            continue
        if kind not in ("e", "n"):
            raise GraphFormatError(lineno, col, f"unknown line type {kind!r}")
        if n is None:
            raise GraphFormatError(lineno, col, "data before the 'p edge' line")
        if len(toks) != 3:
            raise GraphFormatError(lineno, col, f"'{kind}' line takes exactly two integers")
        (c1, t1), (c2, t2) = toks[1], toks[2]
        u = _int(lineno, c1, t1, "vertex")
        if not 1 <= u <= n:
            raise GraphFormatError(lineno, c1, f"vertex {u} out of range 1..{n}")
        if kind == "n":
            wv = _int(lineno, c2, t2, "weight")
            if wv < 0:
                raise GraphFormatError(lineno, c2, f"negative weight {wv}")
            if u - 1 in weights:
                raise GraphFormatError(lineno, col, f"weight of vertex {u} given twice")
            weights[u - 1] = wv
            continue
        v = _int(lineno, c2, t2, "vertex")
        if not 1 <= v <= n:
            raise GraphFormatError(lineno, c2, f"vertex {v} out of range 1..{n}")
        if u == v:
            raise GraphFormatError(lineno, c2, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(lineno, col, f"duplicate edge {u} {v} (first on line {seen[key]})")
        seen[key] = lineno
        edges.append((u - 1, v - 1))
    if n is None:
        raise GraphFormatError(max(1, len(text.splitlines())), 1, "missing 'p edge' line")
    if len(edges) != declared_m:
        raise GraphFormatError(1, 1, f"header declares {declared_m} edges but {len(edges)} were given")
    g = Graph(n, edges)
    return GraphDocument(g, tuple(weights.get(v, 1) for v in range(n)), name)


def serialize_graph(doc: GraphDocument) -> str:
    """Canonical text: name comment, header, non-unit weights, then sorted edges."""
    g = doc.graph
    lines = []
    if doc.name:
        lines.append(f"c name: {doc.name}")
    lines.append(f"p edge {g.n} {g.m}")
    lines += [f"n {v + 1} {w}" for v, w in enumerate(doc.weights) if w != 1]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
