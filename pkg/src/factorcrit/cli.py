"""Command-line front end.

Exit status: 0 when every check passes, 1 when any check fails, 2 on usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graph6
from .errors import CapabilityError, Graph6Error, GraphError
from .harness import (
    SUITES,
    RunSummary,
    describe_graph,
    evaluate,
    format_jsonl,
    format_tsv,
    load_source,
    run_suite,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _add_format(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON lines (default)")
    fmt.add_argument("--tsv", dest="fmt", action="store_const", const="tsv", help="flat tab-separated table")
    p.set_defaults(fmt="json")
    p.add_argument("--certificates", action="store_true", help="attach witnesses to passing checks too")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factorcrit",
        description="Exhaustive checks on minimal k-factor-critical graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="print one graph6 line per isomorphism class")
    p.add_argument("-n", type=int, required=True, help="number of vertices (at most 8)")
    p.add_argument("-k", type=int, help="keep only k-factor-critical graphs")
    p.add_argument("--minimal", action="store_true", help="with -k, keep only minimal ones")
    p.add_argument("--planar", action="store_true", help="keep only planar graphs")

    p = sub.add_parser("suite", help="run a verification suite over a graph stream")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-n", type=int, help="use the built-in enumeration of this order")
    src.add_argument("--input", help="graph6 file, one graph per line")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("-k", type=int, help="restrict to one k (default: 1, 2 and 3)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (0 = all cores)")
    _add_format(p)

    p = sub.add_parser("check", help="run a suite on graph6 strings given on the command line")
    p.add_argument("graphs", nargs="+", metavar="GRAPH6")
    p.add_argument("--suite", choices=SUITES, default="conjecture")
    p.add_argument("-k", type=int)
    _add_format(p)

    p = sub.add_parser("describe", help="invariants and default checks for one graph")
    p.add_argument("graph", metavar="GRAPH6")
    _add_format(p)
    return parser


def _emit(summary: RunSummary, args: argparse.Namespace) -> int:
    if args.fmt == "tsv":
        sys.stdout.write(format_tsv(summary))
    else:
        sys.stdout.write(format_jsonl(summary, args.certificates))
    return EXIT_FAIL if summary.failures else EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    from .criticality import is_k_factor_critical, is_minimal_kfc
    from .enumeration import enumerate_graphs
    from .planarity import is_planar

    if args.minimal and args.k is None:
        raise GraphError("--minimal needs -k")

    def keep(g) -> bool:
        if args.k is not None:
            if not 0 <= args.k < g.n or not is_k_factor_critical(g, args.k):
                return False
            if args.minimal and not is_minimal_kfc(g, args.k):
                return False
        return not args.planar or is_planar(g)

    for g in enumerate_graphs(args.n, keep):
        sys.stdout.write(graph6.encode(g).decode("ascii") + "\n")
    return EXIT_OK


def _cmd_suite(args: argparse.Namespace) -> int:
    lines = load_source(n=args.n, path=args.input)
    summary = run_suite(lines, args.suite, args.k, args.jobs)
    code = _emit(summary, args)
    print(f"{summary.total_graphs} graphs, {len(summary.failures)} failing, "
          f"{summary.wall_time:.2f}s", file=sys.stderr)
    return code


def _cmd_check(args: argparse.Namespace) -> int:
    records = [evaluate(graph6.decode(text), args.suite, args.k, i) for i, text in enumerate(args.graphs)]
    records.sort(key=lambda r: (r.graph_id, r.index))
    return _emit(RunSummary(args.suite, args.k, records), args)


def _cmd_describe(args: argparse.Namespace) -> int:
    rec = describe_graph(args.graph)
    if args.fmt == "tsv":
        for key, value in rec.facts.items():
            sys.stdout.write(f"{key}\t{json.dumps(value, sort_keys=True)}\n")
        for key, value in rec.checks.items():
            sys.stdout.write(f"{key}\t{value}\n")
    else:
        out = rec.to_dict(with_certificates=True)
        sys.stdout.write(json.dumps(out, sort_keys=True) + "\n")
    return EXIT_FAIL if rec.failed else EXIT_OK


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "suite": _cmd_suite,
    "check": _cmd_check,
    "describe": _cmd_describe,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (Graph6Error, CapabilityError, GraphError, OSError) as exc:
        print(f"factorcrit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
