"""Command-line front end: ``sccgraph {build,metrics,verify,compare,catalog}``.

Exit codes: 0 success, 1 a verification check failed, 2 bad input, 3 budget
exceeded.  Human-readable output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys

from . import catalog, export, verify
from .budget import default_budget
from .errors import BudgetExceeded, InputError
from .graphs import MODES, build_graph, edge_difference, graphs_equal, is_spanning_subgraph
from .group import conjugacy_classes, group_is_solvable
from .metrics import metrics_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
RELATIONS = ("abelian", "nilpotent", "solvable")


def _budget(args):
    budget = default_budget()
    if getattr(args, "max_order", None):
        budget = dataclasses.replace(budget, max_order=args.max_order)
    return budget


def _group(args, spec=None):
    return catalog.make(spec or args.group, _budget(args))


def _graph(args, G, relation, mode):
    return build_graph(G, relation, mode, include_identity=args.include_identity,
                       workers=args.threads)


def _write(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_build(args) -> int:
    G = _group(args)
    graph = _graph(args, G, args.relation, args.mode)
    _write(export.export(graph, args.format), args.out)
    return EXIT_OK


def cmd_metrics(args) -> int:
    G = _group(args)
    graph = _graph(args, G, args.relation, args.mode)
    report = metrics_report(graph)
    if args.json:
        _write(export.export_json(report), args.out)
    else:
        lines = [f"{key}: {_plain(value)}" for key, value in report.to_dict().items()]
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _plain(value):
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    if value is None:
        return "none"
    return str(value)


def _suite(args):
    text = args.suite.strip()
    if text in ("default", "stretch"):
        return text, None
    return "custom", [tok for tok in text.split(",") if tok.strip()]


def cmd_verify(args) -> int:
    name, ids = _suite(args)
    ids = verify.resolve_checks(ids)
    if args.corpus:
        corpus = catalog.read_corpus(args.corpus)
    elif name == "stretch":
        corpus = catalog.stretch_corpus()
    else:
        corpus = catalog.default_corpus()
    report = verify.run_suite(corpus, ids, budget=_budget(args), workers=args.threads,
                              suite=name, timings=args.timings)
    sys.stdout.write(report.table())
    if args.json:
        _write(export.export_json(report.to_dict()), args.json)
    return EXIT_OK if report.passed else EXIT_FAIL


def _side(text):
    try:
        rel, mode = text.split("/")
    except ValueError:
        raise InputError(f"expected RELATION/MODE, got {text!r}") from None
    if rel not in RELATIONS:
        raise InputError(f"unknown relation {rel!r}")
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}")
    return rel, mode


def cmd_compare(args) -> int:
    lrel, lmode = _side(args.left)
    rrel, rmode = _side(args.right)
    G = _group(args)
    H = G if not args.right_group else _group(args, args.right_group)
    A = _graph(args, G, lrel, lmode)
    B = _graph(args, H, rrel, rmode)
    if graphs_equal(A, B):
        verdict = "equal"
    elif is_spanning_subgraph(A, B):
        verdict = "left is a spanning subgraph of right"
    elif is_spanning_subgraph(B, A):
        verdict = "right is a spanning subgraph of left"
    else:
        verdict = "incomparable"
    only_left = edge_difference(A, B)
    only_right = edge_difference(B, A)
    lines = [
        f"left: {args.left} ({A.vertex_count} vertices, {A.edge_count} edges)",
        f"right: {args.right} ({B.vertex_count} vertices, {B.edge_count} edges)",
        f"verdict: {verdict}",
        f"difference: {len(only_left)} only in left, {len(only_right)} only in right",
    ]
    for side, edges in (("left", only_left), ("right", only_right)):
        if edges:
            u, v = edges[0]
            lines.append(f"witness only in {side}: {A.vertices[u].name} -- {A.vertices[v].name} "
                         f"({u} -- {v})")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.show:
        G = _group(args, args.show)
        if args.format == "perm":
            sys.stdout.write(catalog.format_perm(G))
            return EXIT_OK
        if args.format == "table":
            sys.stdout.write(catalog.format_table(G))
            return EXIT_OK
        part = conjugacy_classes(G)
        lines = [f"group: {G.name}", f"order: {G.order}", f"backend: {G.backend}",
                 f"classes: {len(part)}", f"solvable: {str(group_is_solvable(G)).lower()}"]
        for c in part.classes:
            lines.append(f"  {c.name}: size {c.size}, representative {G.label(c.representative)}")
        sys.stdout.write("\n".join(lines) + "\n")
        return EXIT_OK
    specs = catalog.stretch_corpus() if args.stretch else catalog.default_corpus()
    for spec in specs:
        order = catalog.expected_order(catalog.GroupSpec.parse(spec))
        sys.stdout.write(f"{spec}\t{order}\n")
    return EXIT_OK


def _common(p):
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker threads (results do not depend on this)")
    p.add_argument("--max-order", type=int, default=None,
                   help="largest group order to construct")


def _graph_opts(p, with_out=True):
    p.add_argument("--group", required=True, help="group spec, e.g. alternating:5")
    p.add_argument("--relation", choices=RELATIONS, default="solvable")
    p.add_argument("--mode", choices=MODES, default="class")
    ident = p.add_mutually_exclusive_group()
    ident.add_argument("--include-identity", dest="include_identity", action="store_true",
                       default=True, help="keep the identity as a vertex (expanded/element)")
    ident.add_argument("--exclude-identity", dest="include_identity", action="store_false")
    if with_out:
        p.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sccgraph",
                                     description="Conjugacy class graphs of finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a graph as DOT, GraphML or JSON")
    _graph_opts(p)
    p.add_argument("--format", choices=("dot", "graphml", "json"), default="dot")
    _common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("metrics", help="print graph invariants")
    _graph_opts(p)
    p.add_argument("--json", action="store_true", help="emit JSON instead of key: value lines")
    _common(p)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("verify", help="run verification checks over a corpus")
    p.add_argument("--suite", default="default",
                   help="default, stretch, or comma-separated check ids such as C1,C10")
    p.add_argument("--corpus", default=None, help="file with one group spec per line")
    p.add_argument("--json", default=None, metavar="PATH", help="also write the JSON report")
    p.add_argument("--timings", action="store_true", help="include per-check timings")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="compare two graphs of one group")
    p.add_argument("--group", required=True)
    p.add_argument("--right-group", default=None,
                   help="group for the right side (must match --group)")
    p.add_argument("--left", required=True, help="RELATION/MODE, e.g. nilpotent/expanded")
    p.add_argument("--right", required=True, help="RELATION/MODE")
    ident = p.add_mutually_exclusive_group()
    ident.add_argument("--include-identity", dest="include_identity", action="store_true",
                       default=True)
    ident.add_argument("--exclude-identity", dest="include_identity", action="store_false")
    _common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("catalog", help="list corpus groups or describe one group")
    p.add_argument("--show", default=None, metavar="SPEC")
    p.add_argument("--format", choices=("summary", "perm", "table"), default="summary")
    p.add_argument("--stretch", action="store_true", help="include stretch groups")
    _common(p)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
