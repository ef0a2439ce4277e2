"""Command-line front end: validate, weights, rank, sensitivity, serve.

Thin formatting layer over the engine; all numbers print at 4 decimals.
Exit codes: 0 success, 1 computation error, 2 validation/parse error,
3 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import (FahpError, SessionParseError, SessionValidationError,
                     SessionVersionError, StorageError)
from .extent import WeightVector
from .model import (AGGREGATION_MODES, RankingResult, SensitivityReport,
                    ranking_csv, sensitivity_csv)
from .store import (CRITERIA_NODE, SessionDocument, load_session,
                    paper_template, validation_notes)
from . import engine

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_VALIDATION = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this CLI reserves 2 for validation."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _UsageError(Exception):
    pass


def _build_parser() -> _Parser:
    parser = _Parser(prog="fahp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_session_source(p: _Parser) -> None:
        p.add_argument("session", nargs="?", help="session JSON file")
        p.add_argument("--demo-paper", action="store_true",
                       help="use the built-in demo dataset instead of a file")

    p = sub.add_parser("validate", help="check a session document")
    p.add_argument("session", help="session JSON file")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("weights", help="derive one node's priority weights")
    add_session_source(p)
    p.add_argument("--node", default=CRITERIA_NODE,
                   help="'criteria' or a criterion id (default: criteria)")
    p.add_argument("--recompute", action="store_true",
                   help="insist on recomputing from judgments")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("rank", help="rank the alternatives")
    add_session_source(p)
    p.add_argument("--aggregation", choices=list(AGGREGATION_MODES),
                   help="override the session's aggregation mode")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("sensitivity", help="sweep one criterion's weight")
    add_session_source(p)
    p.add_argument("--criterion", required=True, help="criterion id to sweep")
    p.add_argument("--grid", required=True,
                   help="comma-separated weights in [0,1], e.g. 0,0.5,1")
    p.add_argument("--aggregation", choices=list(AGGREGATION_MODES))
    p.add_argument("--format", choices=["text", "json", "csv"], default="csv")

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--addr", default="127.0.0.1:8000", help="host:port to bind")
    p.add_argument("--store", default="./sessions", help="session directory")
    return parser


def _load_source(args) -> SessionDocument:
    if args.demo_paper and args.session:
        raise _UsageError("pass either a session file or --demo-paper, not both")
    if args.demo_paper:
        return paper_template()
    if not args.session:
        raise _UsageError("a session file (or --demo-paper) is required")
    return load_session(args.session)


def _parse_grid(text: str) -> list[float]:
    try:
        grid = [float(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise _UsageError(f"--grid must be comma-separated numbers, got {text!r}")
    if not grid:
        raise _UsageError("--grid needs at least one value")
    for g in grid:
        if not (0.0 <= g <= 1.0):
            raise _UsageError(f"--grid values must lie in [0, 1], got {g}")
    return grid


def _weights_text(node: str, wv: WeightVector) -> str:
    width = max(len(label) for label in wv.labels)
    lines = [f"node: {node}"]
    lines += [f"{label:<{width}}  {w:.4f}" for label, w in zip(wv.labels, wv.weights)]
    lines += [f"warning[{d.code}]: {d.message}" for d in wv.diagnostics]
    return "\n".join(lines) + "\n"


def _weights_json(node: str, wv: WeightVector) -> dict:
    return {
        "node": node,
        "labels": list(wv.labels),
        "weights": [round(w, 4) for w in wv.weights],
        "diagnostics": [{"code": d.code, "message": d.message, "label": d.label}
                        for d in wv.diagnostics],
    }


def _ranking_text(result: RankingResult, doc: SessionDocument) -> str:
    names = {m.id: m.name for m in doc.hierarchy.alternatives}
    lines = [f"aggregation: {result.aggregation}", "rank  score   alternative"]
    lines += [f"{e.rank:>4}  {e.score:.4f}  {names[e.alternative]}"
              for e in result.entries]
    return "\n".join(lines) + "\n"


def _ranking_json(result: RankingResult, doc: SessionDocument) -> dict:
    names = {m.id: m.name for m in doc.hierarchy.alternatives}
    return {
        "aggregation": result.aggregation,
        "entries": [{"alternative": e.alternative, "name": names[e.alternative],
                     "rank": e.rank, "score": round(e.score, 4)}
                    for e in result.entries],
    }


def _sensitivity_text(report: SensitivityReport, doc: SessionDocument) -> str:
    chunks = [f"criterion: {report.criterion}"]
    for point in report.points:
        chunks.append(f"-- weight {point.weight:.4f} --")
        chunks.append(_ranking_text(point.ranking, doc).rstrip("\n"))
    if report.reversals:
        chunks.append("reversals:")
        chunks += [f"  {r.threshold:.4f}: {r.leader_before} -> {r.leader_after}"
                   for r in report.reversals]
    return "\n".join(chunks) + "\n"


def _sensitivity_json(report: SensitivityReport, doc: SessionDocument) -> dict:
    return {
        "criterion": report.criterion,
        "points": [{"weight": round(p.weight, 4),
                    "ranking": _ranking_json(p.ranking, doc)}
                   for p in report.points],
        "reversals": [{"threshold": round(r.threshold, 4),
                       "leader_before": r.leader_before,
                       "leader_after": r.leader_after}
                      for r in report.reversals],
    }


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, ensure_ascii=False, indent=2))


def _cmd_validate(args) -> int:
    try:
        doc = load_session(args.session)
    except (SessionParseError, SessionVersionError, StorageError) as exc:
        if args.format == "json":
            _emit_json({"ok": False, "error": str(exc), "violations": [], "notes": []})
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except SessionValidationError as exc:
        if args.format == "json":
            _emit_json({"ok": False,
                        "violations": [{"path": v.path, "message": v.message}
                                       for v in exc.violations],
                        "notes": []})
        else:
            for v in exc.violations:
                print(v)
        return EXIT_VALIDATION
    notes = validation_notes(doc)
    if args.format == "json":
        _emit_json({"ok": True, "violations": [], "notes": notes})
    else:
        print("OK")
        for note in notes:
            print(f"note: {note}")
    return EXIT_OK


def _cmd_weights(args) -> int:
    doc = _load_source(args)
    wv = engine.node_weights(doc, args.node, recompute=args.recompute)
    if args.format == "json":
        _emit_json(_weights_json(args.node, wv))
    else:
        sys.stdout.write(_weights_text(args.node, wv))
    return EXIT_OK


def _cmd_rank(args) -> int:
    doc = _load_source(args)
    result = engine.ranking(doc, args.aggregation)
    if args.format == "json":
        _emit_json(_ranking_json(result, doc))
    elif args.format == "csv":
        sys.stdout.write(ranking_csv(result))
    else:
        sys.stdout.write(_ranking_text(result, doc))
    return EXIT_OK


def _cmd_sensitivity(args) -> int:
    grid = _parse_grid(args.grid)
    doc = _load_source(args)
    report = engine.sensitivity(doc, args.criterion, grid, args.aggregation)
    if args.format == "json":
        _emit_json(_sensitivity_json(report, doc))
    elif args.format == "csv":
        sys.stdout.write(sensitivity_csv(report))
    else:
        sys.stdout.write(_sensitivity_text(report, doc))
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    host, _, port_text = args.addr.rpartition(":")
    if not host or not port_text.isdigit():
        raise _UsageError(f"--addr must look like host:port, got {args.addr!r}")
    app = create_app(store_dir=args.store)
    uvicorn.run(app, host=host, port=int(port_text))
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "weights": _cmd_weights,
    "rank": _cmd_rank,
    "sensitivity": _cmd_sensitivity,
    "serve": _cmd_serve,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"fahp {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SessionParseError, SessionVersionError, StorageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except SessionValidationError as exc:
        for v in exc.violations:
            print(str(v), file=sys.stderr)
        return EXIT_VALIDATION
    except FahpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    except KeyError as exc:
        print(f"error: unknown id {exc}", file=sys.stderr)
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
