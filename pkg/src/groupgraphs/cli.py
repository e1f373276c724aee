"""Command-line front end.

    groupgraphs build Q32 pow --format dot
    groupgraphs iso Q32:pow D32:com --format json
    groupgraphs verify theorem1 --n 1..8
    groupgraphs verify theorem2 --m 2..32
    groupgraphs verify lemmas D12
    groupgraphs verify remarks Q16
    groupgraphs survey --n-max 8 --m-max 32 --format json

Exit codes: 0 all claims hold, 1 usage error, 2 refuted claim (or graphs
not isomorphic for ``iso``), 3 undecided search.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import export
from .graphs import GraphKind, build_graph
from .groups import parse_group
from .iso import DEFAULT_NODE_BUDGET, SearchBudgetExceeded, find_isomorphism
from .verify import (
    Status,
    overall_status,
    reports_to_json,
    survey,
    survey_to_json,
    verify_lemmas,
    verify_remarks,
    verify_theorem1,
    verify_theorem2,
)

EXIT_OK, EXIT_USAGE, EXIT_REFUTED, EXIT_UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def parse_range(text: str) -> range:
    """``a..b`` inclusive, or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected a..b") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def parse_graph_arg(text: str):
    try:
        desc, kind = text.rsplit(":", 1)
        return parse_group(desc), GraphKind(kind.lower())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad graph argument {text!r}: expected <group>:<pow|epow|com> ({exc})") from None


def _group_arg(text: str):
    try:
        return parse_group(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "dot", "text"], default="text")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)

    parser = _Parser(prog="groupgraphs", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", parents=[common], help="build and export a group graph")
    p.add_argument("group", type=_group_arg)
    p.add_argument("kind", type=lambda s: GraphKind(s.lower()), choices=list(GraphKind), metavar="{pow,epow,com}")

    p = sub.add_parser("iso", parents=[common], help="decide isomorphism of two group graphs")
    p.add_argument("first", type=parse_graph_arg)
    p.add_argument("second", type=parse_graph_arg)

    p = sub.add_parser("verify", parents=[common], help="verify lemma, theorem or remark claims")
    p.add_argument("target", choices=["theorem1", "theorem2", "lemmas", "remarks"])
    p.add_argument("group", nargs="?", type=_group_arg)
    p.add_argument("--n", type=parse_range, default=range(1, 9))
    p.add_argument("--m", type=parse_range, default=range(2, 33))

    p = sub.add_parser("survey", parents=[common], help="batch verification over parameter ranges")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--m-max", type=int, default=32)
    p.add_argument("--timings", action="store_true", help="include per-row timings in JSON")
    return parser


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _exit_for(status: Status) -> int:
    return {Status.REFUTED: EXIT_REFUTED, Status.UNDECIDED: EXIT_UNDECIDED}.get(status, EXIT_OK)


def _reports_text(reports) -> str:
    width = max((len(r.claim) for r in reports), default=0)
    lines = []
    for r in reports:
        line = f"{r.claim:<{width}}  {r.status.value}"
        if r.status is Status.NOT_APPLICABLE:
            line += f"  (requires {r.evidence.get('hypothesis')})"
        elif r.status is Status.REFUTED:
            line += f"  counterexample: {r.evidence.get('counterexample')}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _cmd_build(args) -> int:
    graph = build_graph(args.group, args.kind)
    desc = args.group.descriptor
    if args.format == "json":
        text = export.graph_to_json(graph, desc)
    elif args.format == "dot":
        text = export.graph_to_dot(graph, f"{desc}_{args.kind.value}")
    else:
        text = export.graph_to_text(graph, f"{args.kind.value}({desc})")
    _emit(text, args.out)
    return EXIT_OK


def _cmd_iso(args) -> int:
    (g1, k1), (g2, k2) = args.first, args.second
    graph1, graph2 = build_graph(g1, k1), build_graph(g2, k2)
    try:
        outcome = find_isomorphism(graph1, graph2, args.node_budget)
    except SearchBudgetExceeded as exc:
        _emit(json.dumps({"undecided": True, "nodes": exc.nodes}) + "\n" if args.format == "json"
              else f"undecided after {exc.nodes} search nodes\n", args.out)
        return EXIT_UNDECIDED
    if args.format == "json":
        text = json.dumps(outcome.to_json_obj(), sort_keys=True, indent=1) + "\n"
    elif outcome.is_isomorphic:
        head = f"isomorphic: {k1.value}({g1}) ~ {k2.value}({g2})"
        text = "\n".join([head, *(f"{u} -> {v}" for u, v in sorted(outcome.witness.items()))]) + "\n"
    else:
        text = f"not isomorphic: certificate {outcome.certificate.value} {json.dumps(outcome.detail)}\n"
    _emit(text, args.out)
    return EXIT_OK if outcome.is_isomorphic else EXIT_REFUTED


def _cmd_verify(args) -> int:
    if args.target in ("lemmas", "remarks"):
        if args.group is None:
            raise UsageError(f"verify {args.target} needs a group descriptor, e.g. Q16")
        fn = verify_lemmas if args.target == "lemmas" else verify_remarks
        reports = fn(args.group)
    elif args.target == "theorem1":
        reports = [r for n in args.n for r in verify_theorem1(n, args.node_budget)]
    else:
        reports = [r for m in args.m for r in verify_theorem2(m, args.node_budget)]
    _emit(reports_to_json(reports) if args.format == "json" else _reports_text(reports), args.out)
    return _exit_for(overall_status(reports))


def _cmd_survey(args) -> int:
    rows = survey(args.n_max, args.m_max, args.node_budget)
    if args.format == "json":
        text = survey_to_json(rows, timings=args.timings)
    else:
        lines = [f"{'row':<14} {'status':<15} {'claims':>6} {'seconds':>8}"]
        for row in rows:
            lines.append(f"{row.kind + ' ' + str(row.parameter):<14} {row.status.value:<15} "
                         f"{len(row.reports):>6} {row.seconds:>8.3f}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return _exit_for(overall_status([r for row in rows for r in row.reports]))


_COMMANDS = {"build": _cmd_build, "iso": _cmd_iso, "verify": _cmd_verify, "survey": _cmd_survey}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
