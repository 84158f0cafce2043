"""Command-line interface.

Subcommands: lines, bound, construct, verify, sweep.  Exit status 0 on
success, 1 on input errors (including violated preconditions), 2 on
internal invariant violations, 3 when a verification finds a theorem
violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bounds import dbe_bound, min_pair_sum
from .construct import build_certificate
from .core import all_lines
from .errors import InternalError, LinesysError
from .formats import (
    parse_graph,
    parse_hypergraph,
    parse_metric,
    parse_poset,
    render_line_system,
)
from .graphs import graph_betweenness
from .metrics import metric_betweenness
from .posets import poset_betweenness
from .sweeps import (
    graph_report,
    metric_report,
    pair_sum_sweep,
    poset_report,
    run_sweep,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2
EXIT_VIOLATION = 3

STRUCTURE_KINDS = ("graph", "poset", "metric", "hypergraph")


class _UsageError(LinesysError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this package reserves 2 for
    # internal invariant violations, so route usage errors to exit 1.
    def error(self, message):
        raise _UsageError(message)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _parse_structure(kind: str, text: str):
    if kind == "graph":
        return parse_graph(text)
    if kind == "poset":
        return parse_poset(text)
    if kind == "metric":
        return parse_metric(text)
    return parse_hypergraph(text)


def _relation_of(kind: str, structure):
    if kind == "graph":
        return graph_betweenness(structure)
    if kind == "poset":
        return poset_betweenness(structure)
    if kind == "metric":
        return metric_betweenness(structure)
    return structure


def _metric_instance_id(m) -> str:
    return ";".join(",".join(str(d) for d in row) for row in m.dist)


def _cmd_lines(args, out) -> int:
    structure = _parse_structure(args.kind, _read_input(args.input))
    system = all_lines(_relation_of(args.kind, structure))
    if args.format == "jsonl":
        import json

        for entry in system.entries:
            out.write(
                json.dumps(
                    {
                        "members": list(entry.ordered),
                        "generators": [list(g) for g in entry.generators],
                    }
                )
                + "\n"
            )
        out.write(json.dumps({"count": system.line_count}) + "\n")
    else:
        out.write(render_line_system(system) + "\n")
    return EXIT_OK


def _cmd_bound(args, out) -> int:
    wants_poset = args.poset_n is not None or args.height is not None
    wants_pairs = args.pair_sum_n is not None or args.parts is not None
    if not wants_poset and not wants_pairs:
        raise _UsageError(
            "request --poset-n N --height H and/or --pair-sum-n N --parts R"
        )
    if wants_poset:
        if args.poset_n is None or args.height is None:
            raise _UsageError("--poset-n and --height go together")
        out.write(f"{dbe_bound(args.poset_n, args.height)}\n")
    if wants_pairs:
        if args.pair_sum_n is None or args.parts is None:
            raise _UsageError("--pair-sum-n and --parts go together")
        out.write(f"{min_pair_sum(args.pair_sum_n, args.parts)}\n")
    return EXIT_OK


def _cmd_construct(args, out) -> int:
    poset = parse_poset(_read_input(args.input))
    cert = build_certificate(poset)
    if args.format == "jsonl":
        import json

        out.write(
            json.dumps(
                {
                    "chain": list(cert.chain),
                    "layer_lines": [list(line.ordered) for line in cert.layer_lines],
                }
            )
            + "\n"
        )
        for step in cert.steps:
            out.write(
                json.dumps(
                    {
                        "iteration": step.iteration,
                        "step": step.kind.value,
                        "bottom": step.bottom,
                        "top": step.top,
                        "probe": step.probe,
                        "lines": [list(line.ordered) for line in step.lines],
                    }
                )
                + "\n"
            )
        out.write(
            json.dumps({"distinct": cert.total_distinct, "bound": cert.bound}) + "\n"
        )
    else:
        label = poset.universe.label
        out.write("chain: " + " ".join(label(c) for c in cert.chain) + "\n")
        for line in cert.layer_lines:
            out.write(
                "layer line: " + " ".join(label(p) for p in line.ordered) + "\n"
            )
        for step in cert.steps:
            head = (
                f"iteration {step.iteration} step {step.kind.value} "
                f"window {step.bottom}..{step.top}"
            )
            if step.probe is not None:
                head += f" outside {label(step.probe)}"
            out.write(head + "\n")
            for line in step.lines:
                out.write(
                    "  line: " + " ".join(label(p) for p in line.ordered) + "\n"
                )
        out.write(f"distinct {cert.total_distinct} >= bound {cert.bound}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.kind == "hypergraph":
        raise _UsageError(
            "no line-count theorem covers general 3-uniform hypergraphs; "
            "verify supports graph, poset, and metric"
        )
    text = _read_input(args.input)
    cert_issue = None
    if args.kind == "graph":
        g = parse_graph(text)
        if g.size < 3:
            raise _UsageError("graph verification needs n >= 3")
        report = graph_report(g)
    elif args.kind == "poset":
        p = parse_poset(text)
        report, cert_issue = poset_report(p)
        if report is None:
            raise _UsageError(
                "poset verification needs height >= 2 (an antichain has no bound)"
            )
    else:
        m = parse_metric(text)
        report = metric_report(m, _metric_instance_id(m))
    if args.format == "jsonl":
        out.write(report.json_line() + "\n")
    else:
        out.write(f"kind {report.structure_kind} n {report.n}\n")
        out.write(
            f"lines {report.line_count} bound {report.bound} "
            f"universal {'yes' if report.has_universal else 'no'}\n"
        )
        out.write(f"equality case: {'yes' if report.is_equality_case else 'no'}\n")
        out.write(
            f"extremal shape: {'yes' if report.extremal_shape_match else 'no'}\n"
        )
    violation = not report.meets_bound or (
        args.kind != "metric"
        and not report.has_universal
        and report.is_equality_case != report.extremal_shape_match
    )
    if cert_issue is not None:
        out.write(f"certificate problem: {cert_issue}\n")
        return EXIT_INTERNAL
    if violation:
        if args.format != "jsonl":
            out.write("result: THEOREM VIOLATION\n")
        return EXIT_VIOLATION
    if args.format != "jsonl":
        out.write("result: ok\n")
    return EXIT_OK


def _cmd_sweep(args, out) -> int:
    if args.kind == "pairsum":
        summary = pair_sum_sweep(args.n)
        out.write(
            f"pair-sum sweep up to n {summary.max_n}: {summary.cases} cases\n"
        )
        for n, parts, formula, search in summary.mismatches:
            out.write(
                f"MISMATCH n {n} parts {parts}: formula {formula}, "
                f"search {search}\n"
            )
        for big, small in summary.smoothing_failures:
            out.write(f"SMOOTHING FAILURE sizes {big} {small}\n")
        out.write(f"result: {'ok' if summary.ok else 'VIOLATION'}\n")
        return EXIT_OK if summary.ok else EXIT_VIOLATION

    sink = None
    close_me = None
    if args.format == "jsonl":
        if args.out is not None:
            close_me = open(args.out, "w")
            stream = close_me
        else:
            stream = out
        sink = lambda report: stream.write(report.json_line() + "\n")
    try:
        summary = run_sweep(args.kind, args.n, workers=args.workers, report_sink=sink)
    finally:
        if close_me is not None:
            close_me.close()
    target = sys.stderr if args.format == "jsonl" and args.out is None else out
    target.write(
        f"kind {summary.kind} n {summary.n}\n"
        f"enumerated {summary.enumerated} reported {summary.reported} "
        f"checked {summary.checked}\n"
        f"universal {summary.universal_count}\n"
        f"violations {len(summary.violations)}\n"
        f"equality cases {len(summary.equality_ids)}\n"
        f"shape matches {len(summary.shape_match_ids)}\n"
        f"certificate failures {len(summary.certificate_failures)}\n"
    )
    for issue in summary.issues:
        target.write(f"issue: {issue}\n")
    target.write(f"result: {'ok' if summary.ok else 'VIOLATION'}\n")
    if summary.certificate_failures:
        return EXIT_INTERNAL
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="linesys",
        description=(
            "Lines induced by betweenness in graphs, posets, metric spaces, "
            "and 3-uniform hypergraphs: line systems, lower bounds, "
            "constructive certificates, and exhaustive verification sweeps."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lines = sub.add_parser("lines", help="print the distinct lines of one structure")
    lines.add_argument("--kind", choices=STRUCTURE_KINDS, required=True)
    lines.add_argument("--format", choices=("text", "jsonl"), default="text")
    lines.add_argument("input", nargs="?", default="-", help="input path or - for stdin")

    bound = sub.add_parser("bound", help="evaluate the line-count bounds")
    bound.add_argument("--poset-n", type=int)
    bound.add_argument("--height", type=int)
    bound.add_argument("--pair-sum-n", type=int)
    bound.add_argument("--parts", type=int)

    construct = sub.add_parser(
        "construct", help="run the line-finding process on a poset"
    )
    construct.add_argument("--format", choices=("text", "jsonl"), default="text")
    construct.add_argument("input", nargs="?", default="-")

    verify = sub.add_parser("verify", help="check one instance against its bound")
    verify.add_argument("--kind", choices=("graph", "poset", "metric", "hypergraph"), required=True)
    verify.add_argument("--format", choices=("text", "jsonl"), default="text")
    verify.add_argument("input", nargs="?", default="-")

    sweep = sub.add_parser("sweep", help="exhaustively verify all instances of size n")
    sweep.add_argument(
        "--kind", choices=("graph", "poset", "metric", "pairsum"), required=True
    )
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--workers", type=int, default=1)
    sweep.add_argument("--format", choices=("text", "jsonl"), default="text")
    sweep.add_argument("--out", help="write jsonl reports to this path")
    return parser


_COMMANDS = {
    "lines": _cmd_lines,
    "bound": _cmd_bound,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except LinesysError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())
