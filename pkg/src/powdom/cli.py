"""``powdom`` command-line entry point.

Exit codes: 0 success, 1 theorem violation (``verify``), 2 usage or input
error, 3 graph over the exact-search size limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import ExprParseError, PowdomError, SizeLimitError
from .expr import build_graph
from .graph import Graph
from .io import format_graph, load_graph, save_graph
from .monitoring import monitored_set, zero_forcing_closure
from .solvers import DEFAULT_HARD_LIMIT, CapExceeded, InvariantKind, all_minimum_witnesses, min_invariant
from .theorems import SUITES, VIOLATION, has_violation, run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3


def resolve_graph(text: str) -> Graph:
    """Parse ``text`` as a graph expression, falling back to an edge-list file path."""
    try:
        return build_graph(text)
    except ExprParseError:
        if Path(text).is_file():
            return load_graph(text)
        raise


def _parse_set(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _pairs(G: Graph, vertices) -> list[list[int]] | None:
    if G.pairing is None:
        return None
    return [list(G.pairing.unpair(v)) for v in sorted(vertices)]


def _graph_info(G: Graph) -> dict:
    return {"graph": G.name, "n": G.n, "m": G.m}


def cmd_compute(args: argparse.Namespace) -> int:
    G = resolve_graph(args.graph)
    kind = InvariantKind.parse(args.invariant)
    result = min_invariant(G, kind, args.cap, threads=args.threads, hard_limit=args.hard_limit,
                           trace=args.trace)
    out = {**_graph_info(G), "invariant": kind.value}
    if isinstance(result, CapExceeded):
        out.update(value=None, cap_exceeded=True, lower_bound=result.lower_bound, explored=result.explored)
    else:
        out.update(value=result.value, witness=sorted(result.witness))
        if G.pairing is not None:
            out["witness_pairs"] = _pairs(G, result.witness)
        out["explored"] = result.explored
        if args.all_witnesses:
            found = all_minimum_witnesses(G, kind, threads=args.threads, hard_limit=args.hard_limit)
            out["all_witnesses"] = [sorted(w) for w in found]
        if result.trace is not None:
            out["trace"] = result.trace.to_dict()
    if args.json:
        print(_dump(out))
        return EXIT_OK
    print(f"graph: {G.name or '-'} (n={G.n}, m={G.m})")
    print(f"invariant: {kind.value}")
    if out.get("cap_exceeded"):
        print(f"value: > {args.cap} (lower bound {out['lower_bound']})")
        return EXIT_OK
    print(f"value: {out['value']}")
    print(f"witness: {out['witness']}")
    if "witness_pairs" in out:
        print("witness pairs: " + ", ".join(f"({a},{b})" for a, b in out["witness_pairs"]))
    print(f"explored: {out['explored']}")
    for w in out.get("all_witnesses", []):
        print(f"  minimum set: {w}")
    if "trace" in out:
        _print_trace(out["trace"])
    return EXIT_OK


def _print_trace(trace: dict) -> None:
    for e in trace["events"]:
        cause = "-" if e["cause"] is None else e["cause"]
        print(f"  step {e['step']}: {e['v']} ({e['rule']}, cause {cause})")
    print(f"  complete: {str(trace['complete']).lower()}")


def cmd_monitor(args: argparse.Namespace) -> int:
    G = resolve_graph(args.graph)
    closure = zero_forcing_closure if args.forcing else monitored_set
    trace = closure(G, args.set).to_dict()
    if args.json:
        print(_dump(trace))
    else:
        print(f"graph: {G.name or '-'} (n={G.n}, m={G.m})")
        print(f"set: {trace['set']}")
        _print_trace(trace)
        print(f"monitored: {trace['monitored']}")
    return EXIT_OK


def cmd_product(args: argparse.Namespace) -> int:
    G = resolve_graph(args.graph)
    if args.out:
        save_graph(G, args.out)
    if args.json:
        info = {**_graph_info(G), "edges": [list(e) for e in G.edges()]}
        if G.pairing is not None:
            info["pairing"] = {"g_order": G.pairing.g_order, "h_order": G.pairing.h_order}
        print(_dump(info))
    elif not args.out:
        sys.stdout.write(format_graph(G))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_suite(args.suite, args.max_size, args.seeds, threads=args.threads, hard_limit=args.hard_limit)
    if args.json:
        print(_dump([r.to_dict() for r in reports]))
    else:
        _print_table(reports)
    return EXIT_VIOLATION if has_violation(reports) else EXIT_OK


def _print_table(reports) -> None:
    rows = [("theorem", "instance", "inv", "rel", "predicted", "oracle", "verdict")]
    for r in reports:
        rows.append((r.theorem_id, r.instance, r.invariant, r.relation,
                     "-" if r.predicted is None else str(r.predicted),
                     "-" if r.oracle is None else str(r.oracle), r.verdict))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    counts: dict[str, int] = {}
    for r in reports:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    print("summary: " + ", ".join(f"{k}={counts[k]}" for k in sorted(counts)))
    for r in reports:
        if r.verdict == VIOLATION:
            print(f"VIOLATION {r.theorem_id} {r.instance}: predicted {r.relation} {r.predicted}, oracle {r.oracle}")


def cmd_gen(args: argparse.Namespace) -> int:
    G = build_graph(args.graph)
    if args.out:
        save_graph(G, args.out)
    if args.json:
        print(_dump({**_graph_info(G), "edges": [list(e) for e in G.edges()]}))
    elif not args.out:
        sys.stdout.write(format_graph(G))
    return EXIT_OK


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("POWDOM_THREADS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--threads", type=int, default=_default_threads(),
                        help="worker processes (default: $POWDOM_THREADS or 1)")
    common.add_argument("--hard-limit", type=int, default=DEFAULT_HARD_LIMIT,
                        help=f"maximum vertex count for exact search (default {DEFAULT_HARD_LIMIT})")

    parser = argparse.ArgumentParser(prog="powdom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="minimum invariant with witness")
    p.add_argument("--graph", required=True, help="graph expression or edge-list file")
    p.add_argument("--invariant", required=True, choices=[k.value for k in InvariantKind])
    p.add_argument("--cap", type=int)
    p.add_argument("--all-witnesses", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("monitor", parents=[common], help="propagation trace for a given set")
    p.add_argument("--graph", required=True)
    p.add_argument("--set", required=True, type=_parse_set, help="comma-separated vertex ids")
    p.add_argument("--forcing", action="store_true", help="zero-forcing closure instead of monitoring")
    p.set_defaults(func=cmd_monitor)

    p = sub.add_parser("product", parents=[common], help="materialize a product expression")
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", parents=[common], help="check theorem suites against the oracle")
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--max-size", type=int)
    p.add_argument("--seeds", type=int, default=50)
    p.add_argument("--table", action="store_true", help="aligned text table (default)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="write a family graph to an edge-list file")
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: size-limit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except PowdomError as exc:
        print(f"error: {type(exc).__name__}: {' '.join(str(exc).split())}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: io: {exc.strerror}: {exc.filename}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
