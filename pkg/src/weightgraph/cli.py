"""Command-line front end: ``wg check | weights | algebra | enumerate | bounds``.

Exit status: 0 when every check passes, 1 when some condition fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .criteria import BOUND_TABLE_MAX, bound_table, check_weight_graph
from .enumeration import ENUM_MAX, candidate_report, pipeline_survivors
from .errors import WeightGraphError
from .formats import (
    dump_graphs,
    read_edge_list,
    read_structure_constants,
    read_weight_system,
    write_dot,
)
from .pipeline import analyze_algebra
from .weights import sum_triples, weight_graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(lines, out=None):
    out = out or sys.stdout
    for line in lines:
        print(line, file=out)


def cmd_check(args) -> int:
    g = read_edge_list(args.file)
    rep = check_weight_graph(g)
    _emit(rep.keyvalue_lines() if args.format == "keyvalue" else rep.text_lines())
    if args.dot:
        write_dot(g, args.dot)
    return EXIT_OK if rep.overall else EXIT_FAIL


def cmd_weights(args) -> int:
    ws = read_weight_system(args.file)
    g = weight_graph(ws)
    rep = check_weight_graph(g)
    triples = ";".join(f"({i},{j},{k})" for i, j, k in sum_triples(ws)) or "none"
    if args.format == "keyvalue":
        _emit([f"sum_triples={triples}"] + rep.keyvalue_lines())
    else:
        _emit([f"weight sums: {triples}"] + rep.text_lines())
    if args.dot:
        write_dot(g, args.dot, weights=ws)
    return EXIT_OK if rep.overall else EXIT_FAIL


def cmd_algebra(args) -> int:
    alg = read_structure_constants(args.file)
    rep = analyze_algebra(alg)
    _emit(rep.keyvalue_lines() if args.format == "keyvalue" else rep.text_lines())
    if args.dot and rep.graph is not None:
        write_dot(rep.graph, args.dot, name="weight graph", weights=rep.weights)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_enumerate(args) -> int:
    p = args.p
    if not 3 <= p <= ENUM_MAX:
        print(f"wg: error: -p must lie in 3..{ENUM_MAX} (capacity), got {p}", file=sys.stderr)
        return EXIT_USAGE
    rep = candidate_report(p)
    _emit(rep.keyvalue_lines() if args.format == "keyvalue" else rep.text_lines())
    if args.dump:
        survivors = pipeline_survivors(p)[-1][1]
        paths = dump_graphs(survivors, args.dump)
        print(f"wrote {len(paths)} graphs to {args.dump}", file=sys.stderr)
    if args.plot:
        from .plotting import plot_enumeration

        plot_enumeration(rep, args.plot)
    return EXIT_OK


def _margin_flag(row) -> str:
    if row.margin is None:
        return "-"
    if row.margin == 0:
        return "equality"
    return "holds" if row.margin > 0 else "VIOLATED"


def cmd_bounds(args) -> int:
    if not 3 <= args.max <= BOUND_TABLE_MAX:
        print(f"wg: error: --max must lie in 3..{BOUND_TABLE_MAX}, got {args.max}", file=sys.stderr)
        return EXIT_USAGE
    rows = bound_table(args.max)
    if args.format == "keyvalue":
        lines = []
        for r in rows:
            lines.append(f"p{r.p}.naive={r.naive}")
            lines.append(f"p{r.p}.sums={r.sums}")
            lines.append(f"p{r.p}.min={r.sharp}")
            lines.append(f"p{r.p}.f={r.f}")
            if r.margin is not None:
                lines.append(f"p{r.p}.f_minus_p_plus_1={r.margin}")
                lines.append(f"p{r.p}.f_ge_p_plus_1={_margin_flag(r)}")
        _emit(lines)
    else:
        _emit([f"{'p':>3} {'naive':>6} {'sums':>6} {'min':>6} {'f':>6}  f-(p+1)"])
        for r in rows:
            margin = "" if r.margin is None else f"{r.margin:>7}  {_margin_flag(r)}"
            _emit([f"{r.p:>3} {r.naive:>6} {r.sums:>6} {r.sharp:>6} {r.f:>6}  {margin}".rstrip()])
    if args.plot:
        from .plotting import plot_bounds

        plot_bounds(rows, args.plot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wg", description="Weight graphs of nilpotent Lie algebras.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "keyvalue"), default="text")

    sp = sub.add_parser("check", help="test a graph (edge-list file) against the necessary conditions")
    sp.add_argument("file")
    sp.add_argument("--dot", metavar="OUT", help="also write the graph as DOT")
    fmt(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("weights", help="build and test the weight graph of a weight-system file")
    sp.add_argument("file")
    sp.add_argument("--dot", metavar="OUT")
    fmt(sp)
    sp.set_defaults(func=cmd_weights)

    sp = sub.add_parser("algebra", help="full pipeline from a structure-constant file")
    sp.add_argument("file")
    sp.add_argument("--dot", metavar="OUT", help="write the weight graph as DOT")
    fmt(sp)
    sp.set_defaults(func=cmd_algebra)

    sp = sub.add_parser("enumerate", help="enumerate graphs on p vertices and apply the filters")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--dump", metavar="DIR", help="write every surviving graph as an edge list")
    sp.add_argument("--plot", metavar="PNG", help="render the edge-count histogram and stage counts")
    fmt(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("bounds", help="table of the edge bounds and the gap function")
    sp.add_argument("--max", type=int, required=True, metavar="P")
    sp.add_argument("--plot", metavar="PNG", help="render the bounds as a figure")
    fmt(sp)
    sp.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except WeightGraphError as exc:
        print(f"wg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
