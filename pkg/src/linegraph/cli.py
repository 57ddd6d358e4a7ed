"""Command line front end.

Exit codes: 0 ok or affirmative, 1 negative verdict, 2 usage or parse error,
3 a size cap refused the request.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor

from . import catalog
from .errors import CapExceeded, InvalidStructure, LineGraphError, NotALineGraph, NotALineGraphIsomorphism, ParseError
from .graph import (
    Graph,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    is_isomorphic,
    line_graph,
    parse_edge_list,
    parse_graph6,
)
from .krausz import (
    RelationMemo,
    canonical_relation,
    enumerate_decompositions,
    parse_decomposition,
    parse_relation,
    validate_decomposition,
    validate_relation,
)
from .recognition import forbidden_witness_all, is_line_graph_beineke, is_line_graph_krausz
from .rootgraph import (
    chromatic_number_exact,
    edge_parts,
    root_from_decomposition,
    root_from_relation,
    verify_roundtrip,
    whitney_lift,
)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

G6_SUFFIXES = (".g6", ".graph6")
EDGE_SUFFIXES = (".edges", ".el", ".txt")


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ input


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _sniff(path, text):
    low = path.lower()
    if low.endswith(G6_SUFFIXES):
        return "g6"
    if low.endswith(EDGE_SUFFIXES):
        return "edges"
    first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
    if first.startswith(">>graph6<<") or (first and " " not in first and not first.startswith("n=")
                                            and not first.isdigit()):
        return "g6"
    return "edges"


def read_graph(path, fmt=None) -> Graph:
    text = _read_text(path)
    fmt = fmt or _sniff(path, text)
    if fmt == "edges":
        return parse_edge_list(text)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if len(lines) != 1:
        raise ParseError(f"{path}: expected exactly one graph6 line, found {len(lines)}")
    return parse_graph6(lines[0])


def read_phi(path):
    """Edge map lines ``u v x y`` meaning edge uv of G goes to edge xy of H."""
    phi = {}
    for no, line in enumerate(_read_text(path).splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4 or not all(p.isdigit() for p in parts):
            raise ParseError("expected four vertex IDs 'u v x y'", line=no)
        u, v, x, y = map(int, parts)
        phi[(u, v)] = (x, y)
    return phi


# ----------------------------------------------------------------- output


class Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, obj: dict, text: str = None):
        if self.as_json:
            print(json.dumps(obj, sort_keys=True, default=_jsonable))
        elif text is not None:
            print(text.rstrip("\n"))


def _jsonable(x):
    if isinstance(x, (set, frozenset, tuple)):
        return list(x)
    raise TypeError(f"cannot encode {type(x).__name__}")


def _sets_json(sets):
    return [list(s) for s in sets]


def _classes_json(classes):
    return [[list(e) for e in c] for c in classes]


def _graph_json(g: Graph):
    return {"n": g.n, "edges": [list(e) for e in g.edges], "graph6": emit_graph6(g)}


def _show_graph(g: Graph, fmt, dot):
    if dot:
        return emit_dot(g)
    if fmt == "edges":
        return emit_edge_list(g)
    if fmt == "g6":
        return emit_graph6(g)
    return f"graph6 {emit_graph6(g)}\n" + emit_edge_list(g)


# ------------------------------------------------------------------- verbs


def _memo(args):
    return None if args.cap is None else RelationMemo(cap=args.cap)


def _recognize_one(item):
    path, g = item
    verdict = is_line_graph_beineke(g)
    if verdict is True:
        return {"file": path, "line_graph": True}
    return {"file": path, "line_graph": False, "beineke_index": verdict.beineke_index,
            "image": verdict.image()}


def cmd_recognize(args, out):
    items = [(p, read_graph(p, args.format)) for p in args.files]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_recognize_one, items))
    else:
        results = [_recognize_one(it) for it in items]
    code = EXIT_OK
    for r in results:
        if r["line_graph"]:
            text = f"{r['file']}: line graph"
        else:
            code = EXIT_NO
            name = catalog.beineke_names()[r["beineke_index"] - 1]
            text = (f"{r['file']}: not a line graph, Beineke #{r['beineke_index']} ({name}) "
                    f"induced on {r['image']}")
        out.emit(r, text)
    return code


def cmd_witness(args, out):
    g = read_graph(args.file, args.format)
    found = forbidden_witness_all(g)
    names = catalog.beineke_names()
    for w in found:
        emb = [[k, w.embedding[k]] for k in sorted(w.embedding)]
        out.emit({"beineke_index": w.beineke_index, "name": names[w.beineke_index - 1], "embedding": emb},
                 f"#{w.beineke_index} {names[w.beineke_index - 1]}: "
                 + " ".join(f"{a}->{b}" for a, b in emb))
    if not found:
        out.emit({"beineke_index": None}, "no forbidden subgraph: line graph")
        return EXIT_OK
    return EXIT_NO


def cmd_decompose(args, out):
    g = read_graph(args.file, args.format)
    D = is_line_graph_krausz(g, args.cap)
    if D is None:
        out.emit({"line_graph": False}, "not a line graph")
        return EXIT_NO
    out.emit({"line_graph": True, "sets": _sets_json(D.sets)}, D.to_text())
    return EXIT_OK


def cmd_enumerate(args, out):
    g = read_graph(args.file, args.format)
    ds = enumerate_decompositions(g, args.cap)
    if args.as_json:
        out.emit({"count": len(ds)})
        for i, d in enumerate(ds):
            out.emit({"index": i, "sets": _sets_json(d.sets)})
    else:
        print(f"{len(ds)} decomposition(s)")
        for i, d in enumerate(ds):
            print(f"# {i}")
            print(d.to_text(), end="")
    return EXIT_OK if ds else EXIT_NO


def cmd_canonical(args, out):
    g = read_graph(args.file, args.format)
    try:
        R = canonical_relation(g, _memo(args))
    except NotALineGraph as exc:
        out.emit({"line_graph": False, "component": exc.component}, f"not a line graph: {exc}")
        return EXIT_NO
    out.emit({"classes": _classes_json(R.classes)}, R.to_text() or "(no edges)")
    return EXIT_OK


def cmd_validate_relation(args, out):
    g = read_graph(args.file, args.format)
    text = _read_text(args.structure)
    if args.decomposition:
        violation = validate_decomposition(g, parse_decomposition(text))
    else:
        violation = validate_relation(g, parse_relation(text))
    if violation is None:
        out.emit({"ok": True}, "ok")
        return EXIT_OK
    out.emit({"ok": False, "kind": violation.kind, "evidence": violation.evidence}, f"violation {violation}")
    return EXIT_NO


def _emit_witness(out, rw, args, extra=None):
    obj = {"root": _graph_json(rw.root),
           "phi": [[u, v, x] for (u, v), x in sorted(rw.phi.items())],
           "roles": rw.role_sets()}
    obj.update(extra or {})
    lines = [_show_graph(rw.root, args.format, args.dot).rstrip("\n"), "# phi: root edge -> vertex"]
    lines += [f"{u} {v} -> {x}" for (u, v), x in sorted(rw.phi.items())]
    for role, vs in rw.role_sets().items():
        lines.append(f"# {role}: {' '.join(map(str, vs))}".rstrip())
    out.emit(obj, "\n".join(lines))


def cmd_root(args, out):
    g = read_graph(args.file, args.input_format)
    if args.via == "relation":
        try:
            R = canonical_relation(g, _memo(args))
        except NotALineGraph as exc:
            out.emit({"line_graph": False}, f"not a line graph: {exc}")
            return EXIT_NO
        rw = root_from_relation(g, R)
        _emit_witness(out, rw, args, {"via": "relation",
                                      "parts": {k: [list(e) for e in v] for k, v in edge_parts(rw).items()}})
    else:
        D = is_line_graph_krausz(g, args.cap)
        if D is None:
            out.emit({"line_graph": False}, "not a line graph")
            return EXIT_NO
        _emit_witness(out, root_from_decomposition(g, D), args, {"via": "decomposition"})
    return EXIT_OK


def cmd_linegraph(args, out):
    g = read_graph(args.file, args.input_format)
    lg, index = line_graph(g)
    obj = {"line_graph": _graph_json(lg), "index": [[u, v, i] for (u, v), i in sorted(index.items())]}
    text = _show_graph(lg, args.format, args.dot).rstrip("\n")
    text += "\n# vertex <- edge\n" + "\n".join(f"{i} <- {u} {v}" for (u, v), i in sorted(index.items()))
    out.emit(obj, text)
    return EXIT_OK


def cmd_whitney(args, out):
    G = read_graph(args.g, args.format)
    H = read_graph(args.h, args.format)
    phi = read_phi(args.phi)
    res = whitney_lift(G, H, phi)
    obj = {"outcome": res.outcome}
    if res.outcome == "induced":
        obj["sigma"] = [[x, res.sigma[x]] for x in sorted(res.sigma)]
        text = "induced: " + " ".join(f"{x}->{y}" for x, y in obj["sigma"])
    elif res.outcome == "exceptional":
        obj["name"] = res.name
        text = f"exceptional: {res.name}"
    else:
        obj["edge"] = res.edge
        text = f"not induced (edge {res.edge})"
    out.emit(obj, text)
    return EXIT_OK if res.outcome == "induced" else EXIT_NO


def cmd_k0_demo(args, out):
    k, m = args.k, args.m
    g = catalog.k0_truncation(k, m)
    cap = args.cap if args.cap is not None else max(1 << k, 24)
    beineke = is_line_graph_beineke(g) is True
    report = verify_roundtrip(g, cap=cap)
    if report.notes and report.root is None and report.witness is None and beineke:
        raise CapExceeded("k0-demo component", 1 << k, cap)
    chi = chromatic_number_exact(g, max(g.n, 1))
    cliques, size = 1 << (m - k), 1 << k
    star = catalog.star_forest(cliques, size)
    root_ok = report.root is not None and is_isomorphic(report.root, star) is not None
    obj = {"k": k, "m": m, "cliques": cliques, "clique_size": size, "line_graph": beineke,
           "chromatic_number": chi, "root": _graph_json(report.root) if report.root else None,
           "root_is_star_forest": root_ok}
    if args.dot:
        text = emit_dot(g)
    else:
        text = (f"2^(m-k)={cliques} cliques of size {size}, line graph: {'yes' if beineke else 'no'}, "
                f"chi={chi}, root = {cliques} x K_(1,{size})" + ("" if root_ok else " FAILED"))
    out.emit(obj, text)
    return EXIT_OK if beineke and root_ok else EXIT_NO


def cmd_catalog_dump(args, out):
    entries = catalog.entries()
    if args.name:
        entries = [e for e in entries if e.name == args.name]
        if not entries:
            raise UsageError(f"no catalog entry named {args.name!r}")
    for e in entries:
        obj = {"role": e.role, "index": e.index, "name": e.name, "graph": _graph_json(e.graph)}
        if args.dot:
            text = emit_dot(e.graph, name='"%s"' % e.name)
        elif args.format == "edges":
            text = f"# {e.role} {e.index} {e.name}\n" + emit_edge_list(e.graph)
        else:
            text = f"{e.role} {e.index} {e.name} {emit_graph6(e.graph)}"
        out.emit(obj, text)
    return EXIT_OK


def _selfchecks():
    checks = []
    for name, x, partner, target in catalog.table1_pairs():
        checks.append((f"table1 L({name}) ~ {partner}",
                       lambda x=x, t=target: is_isomorphic(line_graph(x)[0], t) is not None))
    for i, b in enumerate(catalog.beineke_graphs(), start=1):
        checks.append((f"beineke #{i} rejected",
                       lambda b=b: is_line_graph_beineke(b) is not True and is_line_graph_krausz(b) is None))
    claw = catalog.beineke_graphs()[0]

    def claw_identity():
        w = is_line_graph_beineke(claw)
        return w is not True and w.beineke_index == 1 and w.embedding == {v: v for v in range(4)}

    checks.append(("claw witness is the identity", claw_identity))

    def fixtures_match():
        shipped = {(e.role, e.index, e.name): e.graph for e in catalog.load_fixture_file()}
        code = {(e.role, e.index, e.name): e.graph for e in catalog.entries()}
        return shipped == code

    checks.append(("fixture file matches code", fixtures_match))
    for name, s in zip(catalog.singular_names(), catalog.singular_graphs()):
        checks.append((f"singular {name} has >= 2 decompositions",
                       lambda s=s: len(enumerate_decompositions(s)) >= 2))
    return checks


def cmd_selfcheck(args, out):
    checks = _selfchecks()

    def run(check):
        name, fn = check
        try:
            return name, bool(fn())
        except LineGraphError:
            return name, False

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run, checks))
    else:
        results = [run(c) for c in checks]
    passed = sum(ok for _, ok in results)
    for name, ok in results:
        out.emit({"check": name, "ok": ok}, f"{'PASS' if ok else 'FAIL'} {name}")
    out.emit({"passed": passed, "failed": len(results) - passed},
             f"{passed} passed, {len(results) - passed} failed")
    return EXIT_OK if passed == len(results) else EXIT_NO


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", dest="as_json", action="store_true", help="one JSON object per line")
    common.add_argument("--cap", type=int, default=None, help="override the size cap of the search")
    common.add_argument("--jobs", type=int, default=1, help="worker count where work can be split")
    common.add_argument("--dot", action="store_true", help="print graphs as Graphviz text")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--format", choices=("g6", "edges"), default=None,
                          help="input format (default: by file extension)")

    parser = argparse.ArgumentParser(prog="linegraph", description="Line graph recognition and root graphs.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("recognize", parents=[common, graph_in], help="line graph verdict via forbidden subgraphs")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("witness", parents=[common, graph_in], help="every forbidden subgraph that embeds")
    p.add_argument("file")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("decompose", parents=[common, graph_in], help="least line graph decomposition")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("enumerate", parents=[common, graph_in], help="all line graph decompositions")
    p.add_argument("file")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("canonical", parents=[common, graph_in], help="canonical line graph relation")
    p.add_argument("file")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("validate-relation", parents=[common, graph_in],
                       help="check a relation file (one class of u-v edges per line)")
    p.add_argument("file")
    p.add_argument("structure")
    p.add_argument("--decomposition", action="store_true",
                   help="the second file is a decomposition (one vertex set per line)")
    p.set_defaults(func=cmd_validate_relation)

    for verb, func, helptext in (("root", cmd_root, "root graph and phi table"),
                                 ("linegraph", cmd_linegraph, "line graph of the input")):
        p = sub.add_parser(verb, parents=[common], help=helptext)
        p.add_argument("file")
        p.add_argument("--input-format", choices=("g6", "edges"), default=None)
        p.add_argument("--format", choices=("g6", "edges"), default=None, help="output format")
        if verb == "root":
            p.add_argument("--via", choices=("relation", "decomposition"), default="decomposition")
        p.set_defaults(func=func)

    p = sub.add_parser("whitney", parents=[common, graph_in], help="lift an edge map to a vertex map")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("phi", help="lines 'u v x y': edge uv of G maps to edge xy of H")
    p.set_defaults(func=cmd_whitney)

    p = sub.add_parser("k0-demo", parents=[common], help="finite truncation of the clique-per-class graph")
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_k0_demo)

    p = sub.add_parser("catalog-dump", parents=[common], help="print the shipped graphs")
    p.add_argument("name", nargs="?")
    p.add_argument("--format", choices=("g6", "edges"), default="g6")
    p.set_defaults(func=cmd_catalog_dump)

    p = sub.add_parser("selfcheck", parents=[common], help="run the shipped fixture checks")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    out = Out(args.as_json)
    try:
        return args.func(args, out)
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ParseError, NotALineGraphIsomorphism, InvalidStructure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
