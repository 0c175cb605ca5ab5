"""Command-line front end.

Commands: ``invariants`` (report rows for input graphs), ``family`` (emit a
constructed family as graph6), ``enumerate`` (emit a sweep as graph6),
``verify`` (run claim checks over a sweep), ``ud`` (UD certificates for
input graphs).

Exit codes: 0 success, 1 a claim check found a counterexample, 2 usage or
input error.  Output is byte-identical for identical inputs, seed and
format, independent of the worker count.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import __version__
from .families import build_family, parse_family_spec
from .graphs import (
    Graph,
    GraphError,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
)
from .invariants import CSV_HEADER, full_report
from .sweeps import SweepError, iter_sweep, parse_sweep_spec
from .theorems import ALL_UNARY_IDS, CHECK_CSV_HEADER, hunt
from .ud import find_ud_certificate


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    common.add_argument("--workers", type=int, default=1, help="parallel workers")
    common.add_argument(
        "--seed", type=int, default=None, help="seed for random sweeps"
    )
    common.add_argument("--output", default=None, help="write output to a file")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="distinv",
        description="Exact distance-based graph invariants and claim checks.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "invariants", parents=[common], help="invariant report per input graph"
    )
    p.add_argument("files", nargs="*", help="graph6 or edge-list files (default stdin)")

    p = sub.add_parser("family", parents=[common], help="emit a graph family")
    p.add_argument("spec", help="e.g. path:7, ak:3, cartesian(path:3,cycle:5)")

    p = sub.add_parser("enumerate", parents=[common], help="emit a sweep as graph6")
    p.add_argument("sweep", help="e.g. trees:2..12, connected:3..7")

    p = sub.add_parser("verify", parents=[common], help="check claims over a sweep")
    p.add_argument("--sweep", required=True, help="sweep spec")
    p.add_argument(
        "--theorems",
        required=True,
        help="comma-separated claim ids, or all-unary",
    )

    p = sub.add_parser("ud", parents=[common], help="UD certificate per input graph")
    p.add_argument("files", nargs="*", help="graph6 or edge-list files (default stdin)")
    return parser


def _read_graphs(files):
    """Yield (source_label, Graph or GraphError) per input graph.

    Edge-list files (first payload line contains a space) hold one graph;
    anything else is treated as one graph6 line per graph.
    """
    sources = files if files else ["-"]
    for name in sources:
        if name == "-":
            text = sys.stdin.read()
            label = "<stdin>"
        else:
            try:
                with open(name, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                yield f"{name}", GraphError(str(exc))
                continue
            label = name
        payload = [
            ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")
        ]
        if not payload:
            continue
        if " " in payload[0].strip():
            try:
                yield label, parse_edge_list(text)
            except GraphError as exc:
                yield label, exc
        else:
            for i, line in enumerate(payload, start=1):
                try:
                    yield f"{label}:{i}", parse_graph6(line)
                except GraphError as exc:
                    yield f"{label}:{i}", exc


def _cmd_invariants(args, out) -> int:
    failed = False
    if args.format == "csv":
        print(CSV_HEADER, file=out)
    for label, item in _read_graphs(args.files):
        if isinstance(item, GraphError):
            print(f"error: {label}: {item}", file=sys.stderr)
            failed = True
            continue
        try:
            rep = full_report(item)
        except GraphError as exc:
            print(f"error: {label}: {exc}", file=sys.stderr)
            failed = True
            continue
        if args.format == "csv":
            print(rep.csv_row(), file=out)
        else:
            print(json.dumps(rep.to_json_dict(), sort_keys=True), file=out)
    return 2 if failed else 0


def _cmd_family(args, out) -> int:
    g = build_family(parse_family_spec(args.spec))
    print(emit_graph6(g), file=out)
    return 0


def _cmd_enumerate(args, out) -> int:
    spec = parse_sweep_spec(args.sweep)
    if args.seed is not None:
        spec = dataclasses.replace(spec, seed=args.seed)
        spec.validate()
    for g in iter_sweep(spec):
        print(emit_graph6(g), file=out)
    return 0


def _cmd_verify(args, out) -> int:
    spec = parse_sweep_spec(args.sweep)
    if args.seed is not None:
        spec = dataclasses.replace(spec, seed=args.seed)
        spec.validate()
    token = args.theorems.strip()
    ids = list(ALL_UNARY_IDS) if token == "all-unary" else [
        t.strip() for t in token.split(",") if t.strip()
    ]
    reports = hunt(spec, ids, workers=max(1, args.workers))
    if args.format == "csv":
        print(CHECK_CSV_HEADER, file=out)
        for rep in reports:
            print(rep.csv_row(), file=out)
    else:
        print(
            json.dumps([rep.to_json_dict() for rep in reports], sort_keys=True),
            file=out,
        )
    found = False
    for rep in reports:
        for cex in rep.counterexamples:
            found = True
            print(
                f"counterexample {rep.theorem_id} {cex.graph_id} "
                f"{json.dumps(cex.detail, sort_keys=True)}",
                file=sys.stderr,
            )
        if args.verbose and rep.equality_cases:
            print(
                f"equality {rep.theorem_id}: {' '.join(rep.equality_cases)}",
                file=sys.stderr,
            )
    return 1 if found else 0


def _cmd_ud(args, out) -> int:
    failed = False
    for label, item in _read_graphs(args.files):
        if isinstance(item, GraphError):
            print(f"error: {label}: {item}", file=sys.stderr)
            failed = True
            continue
        try:
            cert = find_ud_certificate(item)
        except GraphError as exc:
            print(f"error: {label}: {exc}", file=sys.stderr)
            failed = True
            continue
        print(json.dumps(cert.to_json_dict(), sort_keys=True), file=out)
    return 2 if failed else 0


_COMMANDS = {
    "invariants": _cmd_invariants,
    "family": _cmd_family,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "ud": _cmd_ud,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    out = sys.stdout
    opened = None
    if args.output:
        opened = open(args.output, "w", encoding="utf-8")
        out = opened
    try:
        return _COMMANDS[args.command](args, out)
    except (GraphError, SweepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if opened is not None:
            opened.close()


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
