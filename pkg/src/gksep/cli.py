"""Command-line interface.

Exit codes: 0 decided or solved, 1 property false (witness printed),
2 usage or parse error, 3 indeterminate (budget or cap exhausted).
Vertices are printed 1-based, matching the graph file format.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import generators as gen
from .decomposition import Atom, decompose
from .dfg2 import recognize_dfg2, solve_dfg2
from .errors import Indeterminate, NotInClassError
from .graph import Graph
from .io import GraphDocument, GraphFormatError, parse_graph, serialize_graph
from .lexbfs import first_violation, lexbfs
from .membership import gk_membership
from .minors import DEFAULT_BUDGET, find_induced_minor, g2_forbidden_minor_scan
from .separators import DEFAULT_CAP, all_minimal_separators, minimal_ab_separators
from .solvers import chromatic_number, mwc_bruteforce, mwc_g2, mwss_bruteforce, mwss_gk_smallscale

OK, FALSE, USAGE, INDETERMINATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _one_based(vertices) -> list[int]:
    return sorted(v + 1 for v in vertices)


def _cap(args) -> int:
    return args.budget if args.budget is not None else DEFAULT_CAP


def _budget(args) -> int:
    return args.budget if args.budget is not None else DEFAULT_BUDGET


def _read(path: str, stdin: TextIO) -> GraphDocument:
    if path == "-":
        return parse_graph(stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


# -- commands: each returns (exit code, verdict dict) -------------------------------

GEN_FAMILIES = {
    "complete": (gen.complete, (int,)),
    "edgeless": (gen.edgeless, (int,)),
    "path": (gen.path, (int,)),
    "cycle": (gen.cycle, (int,)),
    "bipartite": (gen.complete_bipartite, (int, int)),
    "theta": (gen.theta, (int, int, int)),
    "pyramid": (gen.pyramid, (int, int, int)),
    "prism": (gen.prism, (int, int, int)),
    "forbidden-g2": (gen.forbidden_g2_minor, (int,)),
    "random": (gen.random_graph, (int, float)),
    "chordal": (gen.random_chordal, (int,)),
}


def cmd_gen(args, stdin) -> tuple[int, dict | str]:
    family, params = args.family, args.params
    if family == "prism" and args.short is not None:
        if params:
            raise UsageError("prism --short takes no positional parameters")
        g = gen.short_n_prism(args.short)
    elif family == "wheel":
        if len(params) < 4:
            raise UsageError("wheel HOLE_LEN SPOKE SPOKE SPOKE [...]")
        g = gen.wheel(int(params[0]), (int(x) for x in params[1:]))
    elif family == "g2":
        if len(params) != 2:
            raise UsageError("g2 N P")
        g = gen.random_g2_sample(int(params[0]), float(params[1]), args.seed, budget=args.budget or 1000)
        if g is None:
            raise Indeterminate("no G_2 sample found within the budget")
    elif family in GEN_FAMILIES:
        fn, types = GEN_FAMILIES[family]
        if len(params) != len(types):
            raise UsageError(f"{family} takes {len(types)} parameter(s)")
        values = [t(p) for t, p in zip(types, params)]
        if family in ("random", "chordal"):
            values.append(args.seed)
        g = fn(*values)
    else:
        raise UsageError(f"unknown family {family!r}; choose from {sorted([*GEN_FAMILIES, 'wheel', 'g2'])}")
    name = f"prism --short {args.short}" if args.short is not None else " ".join([family, *params])
    return OK, serialize_graph(GraphDocument(g, name=name))


def cmd_membership(args, stdin):
    doc = _read(args.file, stdin)
    verdict = gk_membership(doc.graph, args.k, cap=_cap(args))
    if verdict.in_class:
        return OK, {"ok": True, "value": True}
    rec = verdict.witness
    witness = {"separator": _one_based(rec.S), "pair": _one_based(rec.witness_pair)}
    return FALSE, {"ok": True, "value": False, "witness": witness}


def cmd_separators(args, stdin):
    doc = _read(args.file, stdin)
    g = doc.graph
    if args.pair:
        a, b = (x - 1 for x in args.pair)
        if not (0 <= a < g.n and 0 <= b < g.n):
            raise UsageError("--pair vertices out of range")
        seps = minimal_ab_separators(g, a, b, cap=_cap(args))
    else:
        seps = all_minimal_separators(g, cap=_cap(args))
    return OK, {"ok": True, "value": len(seps), "certificate": [_one_based(s) for s in seps]}


def cmd_lexbfs(args, stdin):
    doc = _read(args.file, stdin)
    g = doc.graph
    if g.n == 0:
        return OK, {"ok": True, "value": []}
    if not 1 <= args.start <= g.n:
        raise UsageError("--start out of range")
    order = list(lexbfs(g, args.start - 1).seq)
    out = {"ok": True, "value": [v + 1 for v in order]}
    if args.k is not None:
        bad = first_violation(g, order, args.k)
        if bad is not None:
            out["witness"] = {"position": bad + 1, "vertex": order[bad] + 1}
            return FALSE, out
    return OK, out


def _tree_json(tree) -> dict:
    if isinstance(tree, Atom):
        return {"atom": _one_based(tree.vertices)}
    return {"cutset": _one_based(tree.cutset), "side": _one_based(tree.side),
            "left": _tree_json(tree.left), "right": _tree_json(tree.right)}


def cmd_decompose(args, stdin):
    doc = _read(args.file, stdin)
    tree = decompose(doc.graph)
    atoms = []
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            atoms.append(_one_based(node.vertices))
        else:
            stack += [node.right, node.left]
    return OK, {"ok": True, "value": len(atoms), "certificate": {"atoms": atoms, "tree": _tree_json(tree)}}


def cmd_minor(args, stdin):
    doc = _read(args.file, stdin)
    g = doc.graph
    if args.H is None:
        hit = g2_forbidden_minor_scan(g, budget=_budget(args))
        if hit is None:
            return FALSE, {"ok": True, "value": False}
        h, model = hit.minor, hit.model
    else:
        h = _read(args.H, stdin).graph
        model = find_induced_minor(g, h, budget=_budget(args))
        if model is None:
            return FALSE, {"ok": True, "value": False}
    out = {"ok": True, "value": True,
           "certificate": {str(u + 1): _one_based(model[u]) for u in range(h.n)}}
    if args.H is None:
        out["witness"] = {"forbidden_k": hit.k}
    return OK, out


def cmd_recognize(args, stdin):
    doc = _read(args.file, stdin)
    rec = recognize_dfg2(doc.graph)
    atoms = sorted(([cls.kind, cls.size, _one_based(atom.vertices)] for atom, cls in rec.atoms), key=lambda t: t[2])
    out = {"ok": True, "value": rec.accepted, "certificate": {"atoms": atoms}}
    if rec.accepted:
        return OK, out
    if not rec.diamond_free:
        out["witness"] = {"reason": "diamond"}
    else:
        out["witness"] = {"reason": "atom", "atoms": [a for a in atoms if a[0] == "other"]}
    return FALSE, out


def cmd_solve(args, stdin):
    doc = _read(args.file, stdin)
    g, w = doc.graph, list(doc.weights)
    problem, method = args.problem, args.method
    if method == "auto":
        rec = recognize_dfg2(g)
        if rec.accepted:
            res = solve_dfg2(g, w, problem, recognition=rec)
        elif problem == "mwc" and gk_membership(g, 2, cap=_cap(args)).in_class:
            res = mwc_g2(g, w, strict=True)
        else:
            res = _brute(g, w, problem)
    elif method == "g2":
        if problem != "mwc":
            raise UsageError("--method g2 only solves mwc")
        res = mwc_g2(g, w, strict=args.strict)
    elif method == "dfg2":
        res = solve_dfg2(g, w, problem, strict=args.strict)
    else:
        res = _brute(g, w, problem)
    if problem == "color":
        cert = {str(v + 1): c for v, c in sorted(res.certificate.items())}
    else:
        cert = _one_based(res.certificate)
    return OK, {"ok": True, "value": res.value, "certificate": cert}


def _brute(g: Graph, w: list[int], problem: str):
    if problem == "mwc":
        return mwc_bruteforce(g, w)
    if problem == "mwss":
        return mwss_gk_smallscale(g, w) if g.n > 20 else mwss_bruteforce(g, w)
    return chromatic_number(g)


COMMANDS = {
    "gen": cmd_gen, "membership": cmd_membership, "separators": cmd_separators, "lexbfs": cmd_lexbfs,
    "decompose": cmd_decompose, "minor": cmd_minor, "recognize": cmd_recognize, "solve": cmd_solve,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the verdict as JSON")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None, help="search / enumeration budget")
    common.add_argument("--strict", action="store_true", help="verify class membership instead of trusting it")
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; work is single-threaded")

    parser = argparse.ArgumentParser(prog="gksep", parents=[common],
                                     description="Minimal separators, clique covers and the G_k graph classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a named or random graph")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--short", type=int, help="short n-prism (family 'prism')")

    p = sub.add_parser("membership", parents=[common], help="is every minimal separator covered by k cliques?")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("file")

    p = sub.add_parser("separators", parents=[common], help="list minimal separators")
    p.add_argument("--pair", type=int, nargs=2, metavar=("A", "B"))
    p.add_argument("file")

    p = sub.add_parser("lexbfs", parents=[common], help="LexBFS order, optionally checked as k-simplicial elimination")
    p.add_argument("--start", type=int, default=1)
    p.add_argument("-k", type=int)
    p.add_argument("file")

    p = sub.add_parser("decompose", parents=[common], help="clique-cutset decomposition")
    p.add_argument("file")

    p = sub.add_parser("minor", parents=[common], help="induced-minor search (default: G_2 forbidden family)")
    p.add_argument("-H", help="pattern graph file")
    p.add_argument("file")

    p = sub.add_parser("recognize", parents=[common], help="recognize a graph class")
    p.add_argument("cls", choices=["dfg2"])
    p.add_argument("file")

    p = sub.add_parser("solve", parents=[common], help="weighted clique, weighted stable set, colouring")
    p.add_argument("problem", choices=["mwc", "mwss", "color"])
    p.add_argument("--method", choices=["auto", "g2", "dfg2", "brute"], default="auto")
    p.add_argument("file")
    return parser


def _render(result: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(result, sort_keys=True)
    lines = []
    for key in ("ok", "value", "certificate", "witness", "indeterminate", "error"):
        if key in result:
            val = result[key]
            lines.append(f"{key}: {json.dumps(val, sort_keys=True) if not isinstance(val, str) else val}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("gksep: --threads must be positive", file=sys.stderr)
        return USAGE
    try:
        code, result = COMMANDS[args.command](args, stdin)
    except (UsageError, GraphFormatError) as exc:
        print(f"gksep: {exc}", file=sys.stderr)
        if args.json:
            print(_render({"ok": False, "error": str(exc)}, True), file=stdout)
        return USAGE
    except ValueError as exc:
        print(f"gksep: {exc}", file=sys.stderr)
        return USAGE
    except NotInClassError as exc:
        result = {"ok": True, "value": False, "witness": {"reason": str(exc)}}
        print(_render(result, args.json), file=stdout)
        return FALSE
    except Indeterminate as exc:
        result = {"ok": False, "indeterminate": str(exc)}
        print(_render(result, args.json), file=stdout)
        return INDETERMINATE
    if isinstance(result, str):
        stdout.write(result)
    else:
        print(_render(result, args.json), file=stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
