"""Command line: analyze, construct, verify, colour-graph.

Exit codes: 0 ok, 1 theorem failure, 2 input or builder error, 3 search
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import kernels
from .colour import build_colour_graph, check_all
from .constructions import (
    from_complement_pattern,
    glue,
    named_graph,
    parse_dimacs,
    sat_reduction,
)
from .constructions.glue import parts_from_json
from .constructions.sat import HUB_WIRINGS, VARIABLE_GADGETS
from .errors import MetricBasisError, SearchBudgetExceeded
from .graph import Graph, from_json_dict, load_graph, to_dot, to_edge_list, to_json
from .resolver import REPORT_SCHEMA, Role, analyze
from .theorems import atlas_corpus, random_corpus, run_all, run_corpus, summarize

EXIT_OK = 0
EXIT_THEOREM = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

ROLE_COLOURS = {Role.BASIS_FORCED: "black", Role.FLEXIBLE: "gray", Role.VOID: "white"}


class InputError(Exception):
    pass


def _positive_int(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("path", nargs="?", help="graph file (.json or edge list)")
    p.add_argument("--named", help="catalogue graph name")
    p.add_argument("--input", help="graph file (.json or edge list)")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=_positive_int, default=kernels.DEFAULT_MAX_NODES)
    p.add_argument("--budget-secs", type=_positive_float, default=kernels.DEFAULT_MAX_SECONDS)
    p.add_argument("--backend", choices=kernels.BACKENDS, default=None)


def _read_graph(args) -> Graph:
    sources = [s for s in (args.path, args.input, args.named) if s]
    if len(sources) != 1:
        raise InputError("give exactly one of a path, --input or --named")
    if args.named:
        return named_graph(args.named)
    return load_graph(args.path or args.input)


def _analyze(g: Graph, args):
    return analyze(g, max_nodes=args.budget_nodes, max_seconds=args.budget_secs, backend=args.backend)


def _emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "json":
        return to_json(g) + "\n"
    if fmt == "dot":
        return to_dot(g)
    return to_edge_list(g)


def cmd_analyze(args) -> int:
    g = _read_graph(args)
    a = _analyze(g, args)
    if args.format == "json":
        out = a.to_json(g) + "\n"
    elif args.format == "dot":
        out = to_dot(g, highlight={v: ROLE_COLOURS[r] for v, r in enumerate(a.roles)})
    elif args.format == "edgelist":
        out = to_edge_list(g)
    else:
        out = a.to_text(g)
    sys.stdout.write(out)
    return EXIT_OK


def _glue_part_graph(part: dict, base: str) -> Graph:
    if "named" in part:
        return named_graph(part["named"])
    if "graph" in part:
        return from_json_dict(part["graph"])
    if "path" in part:
        return load_graph(os.path.join(base, part["path"]))
    raise InputError("each glue part needs 'named', 'graph' or 'path'")


def cmd_construct(args) -> int:
    if args.kind == "named":
        g = named_graph(args.spec)
    elif args.kind == "pattern":
        g = from_complement_pattern(args.spec)
    elif args.kind == "glue":
        with open(args.spec, encoding="utf-8") as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InputError(f"invalid JSON: {exc}") from None
        base = os.path.dirname(os.path.abspath(args.spec))
        spec = parts_from_json(obj, lambda p: _glue_part_graph(p, base))
        g = glue(spec, max_nodes=args.budget_nodes, max_seconds=args.budget_secs).graph
    else:
        with open(args.spec, encoding="utf-8") as fh:
            f = parse_dimacs(fh.read())
        g = sat_reduction(f, gadget=args.gadget, hub_wiring=args.hub_wiring).graph
    sys.stdout.write(_emit_graph(g, args.format))
    return EXIT_OK


def _parse_corpus(text: str) -> int:
    key, _, val = text.partition("=")
    if key != "n" or not val.isdigit() or int(val) < 2:
        raise InputError("--corpus expects n=<k> with k >= 2")
    return int(val)


def cmd_verify(args) -> int:
    if args.corpus:
        k = _parse_corpus(args.corpus)
        if k <= 7:
            graphs = list(atlas_corpus(k))
        else:
            graphs = random_corpus(args.corpus_size, 8, k, args.seed)
        summary = summarize(run_corpus(graphs, threads=args.threads))
        out = json.dumps(summary.to_dict(), sort_keys=True) + "\n" if args.format == "json" else summary.to_text()
        sys.stdout.write(out)
        return EXIT_OK if summary.ok else EXIT_THEOREM
    g = _read_graph(args)
    report = run_all(g, _analyze(g, args))
    sys.stdout.write(report.to_json() + "\n" if args.format == "json" else report.to_text())
    return EXIT_OK if report.ok else EXIT_THEOREM


def cmd_colour_graph(args) -> int:
    g = _read_graph(args)
    a = _analyze(g, args)
    if not 0 <= args.basis_index < len(a.bases):
        raise InputError(f"basis index {args.basis_index} out of range (0..{len(a.bases) - 1})")
    basis = a.bases[args.basis_index]
    cg = build_colour_graph(g.distances(), basis)
    if args.format == "json":
        reports = check_all(cg, a.basis_forced, is_basis=True)
        obj = {
            "schema": REPORT_SCHEMA,
            "basis": list(basis),
            "edges": [{"x": x, "y": y, "colour": c} for x, y, c in cg.edges],
            "checks": {r.name: r.passed for r in reports},
        }
        out = json.dumps(obj, sort_keys=True) + "\n"
    elif args.format == "text":
        lines = [f"basis: {{{', '.join(g.label(v) for v in basis)}}}"]
        for r in basis:
            es = ", ".join(f"{g.label(x)}{g.label(y)}" for x, y in cg.edges_of(r))
            lines.append(f"colour {g.label(r)}: {es}")
        out = "\n".join(lines) + "\n"
    else:
        out = cg.to_dot(g)
    sys.stdout.write(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="metricbasis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="metric dimension, all metric bases and vertex roles")
    _add_input(p)
    _add_budget(p)
    p.add_argument("--format", choices=("text", "json", "dot", "edgelist"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build a graph family member")
    p.add_argument("kind", choices=("named", "pattern", "glue", "sat"))
    p.add_argument("spec", help="catalogue name, pattern string, glue JSON file or DIMACS file")
    p.add_argument("--format", choices=("edgelist", "json", "dot"), default="edgelist")
    p.add_argument("--gadget", choices=VARIABLE_GADGETS, default="hexagon")
    p.add_argument("--hub-wiring", choices=HUB_WIRINGS, default="all")
    _add_budget(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the structural theorems on a graph or corpus")
    _add_input(p)
    _add_budget(p)
    p.add_argument("--corpus", help="n=<k>: all connected graphs up to k<=7, else a random corpus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corpus-size", type=_positive_int, default=200)
    p.add_argument("--threads", type=_positive_int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("colour-graph", help="colour graph of one enumerated metric basis")
    _add_input(p)
    _add_budget(p)
    p.add_argument("--basis-index", type=int, default=0)
    p.add_argument("--format", choices=("dot", "json", "text"), default="dot")
    p.set_defaults(func=cmd_colour_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (MetricBasisError, InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
