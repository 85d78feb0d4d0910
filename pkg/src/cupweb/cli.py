"""Command-line interface.

Subcommands: enumerate, graph, matrix, inverse, resolve, witness, verify,
render.  Exit codes: 0 success, 1 verification failure, 2 usage or input
error.  Output goes to stdout unless --output is given; the optional
CUPWEB_OUTPUT_DIR environment variable prefixes relative output paths.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .diagrams import Matching, column_matching, render_ascii, render_tikz
from .errors import BudgetExceededError, DominanceError
from .resolution import (
    build_resolution_graph,
    check_witness,
    resolution_graph_dot,
    resolve_full,
    resolve_step,
    sinks_to_json,
    witness_path,
)
from .transition import (
    TransitionMatrix,
    inverse_matrix,
    matrix_to_csv,
    order_conjecture_report,
    transition_matrix,
    verify_positivity,
    verify_psi,
    verify_unitriangular,
)
from .young import (
    DEFAULT_MAX_N,
    StandardTableau,
    TableauGraph,
    build_tableau_graph,
    rank,
)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("value must be a positive integer")
    return value


def _load_json_arg(text: str):
    if text == "-":
        return json.load(sys.stdin)
    if text.startswith("@"):
        return json.loads(Path(text[1:]).read_text())
    return json.loads(text)


def _parse_strategy(text: str):
    if text == "first":
        return "first"
    if text.startswith("scripted:"):
        return tuple(int(x) for x in text[len("scripted:"):].split(","))
    raise ValueError(f"unknown strategy {text!r}; use 'first' or 'scripted:i,j,...'")


def _effective_max_n(args) -> int:
    if getattr(args, "force", False):
        return max(args.n, args.max_n)
    return args.max_n


def _emit(args, text: str) -> None:
    if args.output is None:
        sys.stdout.write(text)
        return
    path = Path(args.output)
    if not path.is_absolute():
        base = os.environ.get("CUPWEB_OUTPUT_DIR")
        if base:
            path = Path(base) / path
    path.write_text(text)


def tableau_graph_dot(graph: TableauGraph) -> str:
    lines = ["digraph tableau_graph {", "  rankdir=TB;"]
    for k, v in enumerate(graph.vertices):
        lines.append(f'  t{k} [label="{v.row_word()}"];')
    for a, b, i in graph.edges:
        lines.append(f'  t{a} -> t{b} [label="s_{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tableau_graph_json(graph: TableauGraph) -> dict:
    return {
        "n": graph.n,
        "vertices": [v.to_json() for v in graph.vertices],
        "edges": [list(e) for e in graph.edges],
    }


def cmd_enumerate(args) -> int:
    graph = build_tableau_graph(args.n, _effective_max_n(args))
    records = [
        {
            "top": list(t.top),
            "bottom": list(t.bottom),
            "rank": rank(t, graph),
            "word": t.row_word(),
        }
        for t in graph.vertices
    ]
    if args.format == "json":
        _emit(args, json.dumps(records, indent=2) + "\n")
    elif args.format == "ascii":
        lines = [f"rank={r['rank']}  {r['word']}" for r in records]
        _emit(args, "\n".join(lines) + "\n")
    else:
        print(f"error: enumerate does not support format {args.format}",
              file=sys.stderr)
        return 2
    return 0


def cmd_graph(args) -> int:
    graph = build_tableau_graph(args.n, _effective_max_n(args))
    if args.format == "dot":
        _emit(args, tableau_graph_dot(graph))
    elif args.format == "json":
        _emit(args, json.dumps(tableau_graph_json(graph), indent=2) + "\n")
    else:
        print(f"error: graph does not support format {args.format}",
              file=sys.stderr)
        return 2
    return 0


def _emit_matrix(args, entries, index, title) -> int:
    if args.format == "csv":
        _emit(args, matrix_to_csv(entries, index, title))
    elif args.format == "json":
        payload = {
            "n": args.n,
            "order": "rank, then lexicographic top row",
            "index": [t.to_json() for t in index],
            "entries": [list(row) for row in entries],
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        print(f"error: unsupported matrix format {args.format}", file=sys.stderr)
        return 2
    return 0


def cmd_matrix(args) -> int:
    matrix = transition_matrix(args.n, _effective_max_n(args))
    return _emit_matrix(
        args, matrix.entries, matrix.index, f"transition matrix, n={args.n}"
    )


def cmd_inverse(args) -> int:
    matrix = transition_matrix(args.n, _effective_max_n(args))
    inverse = inverse_matrix(matrix)
    return _emit_matrix(
        args, inverse, matrix.index, f"inverse transition matrix, n={args.n}"
    )


def cmd_resolve(args) -> int:
    m = Matching.from_json(_load_json_arg(args.matching))
    strategy = _parse_strategy(args.strategy)
    if args.format == "json":
        sinks = resolve_full(m, strategy, args.node_budget)
        _emit(args, json.dumps(sinks_to_json(m.n2, sinks), indent=2) + "\n")
    elif args.format == "dot":
        graph = build_resolution_graph(m, strategy, args.node_budget)
        _emit(args, resolution_graph_dot(graph))
    else:
        print(f"error: resolve does not support format {args.format}",
              file=sys.stderr)
        return 2
    return 0


def cmd_witness(args) -> int:
    t = StandardTableau.from_json(_load_json_arg(args.tableau_t))
    s = StandardTableau.from_json(_load_json_arg(args.tableau_s))
    try:
        script = witness_path(t, s)
    except DominanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    cur = column_matching(t.columns())
    intermediates = [cur.to_json()]
    for move in script:
        cur = resolve_step(cur, move.crossing, move.kind)
        intermediates.append(cur.to_json())
    valid = check_witness(t, s, script)
    payload = {
        "moves": [m.to_json() for m in script],
        "intermediates": intermediates,
        "final": cur.to_json(),
        "valid": valid,
    }
    _emit(args, json.dumps(payload, indent=2) + "\n")
    return 0 if valid else 1


def _corrupted(matrix: TransitionMatrix) -> TransitionMatrix:
    entries = [list(row) for row in matrix.entries]
    if len(entries) == 1:
        entries[0][0] = 0
    else:
        entries[-1][0] += 1
    return TransitionMatrix(matrix.n, matrix.index, tuple(tuple(r) for r in entries))


def cmd_verify(args) -> int:
    if args.self_test and args.which == "conjecture":
        print("error: --self-test corrupts the matrix, which the conjecture "
              "check does not read", file=sys.stderr)
        return 2
    matrix = transition_matrix(args.n, _effective_max_n(args))
    if args.self_test:
        matrix = _corrupted(matrix)
    which = (
        ["unitriangular", "positivity", "psi", "conjecture"]
        if args.which == "all"
        else [args.which]
    )
    reports = []
    for name in which:
        if name == "unitriangular":
            reports.append(verify_unitriangular(matrix))
        elif name == "positivity":
            reports.append(verify_positivity(matrix))
        elif name == "psi":
            reports.append(verify_psi(matrix, step_budget=args.step_budget))
        elif name == "conjecture":
            reports.append(order_conjecture_report(args.n, _effective_max_n(args)))
    _emit(args, json.dumps([r.to_json() for r in reports], indent=2) + "\n")
    return 0 if all(r.passed for r in reports) else 1


def cmd_render(args) -> int:
    obj = _load_json_arg(args.object)
    if isinstance(obj, dict) and "arcs" in obj:
        m = Matching.from_json(obj)
        if args.format == "ascii":
            _emit(args, render_ascii(m))
        elif args.format == "tikz":
            _emit(args, render_tikz(m))
        else:
            print("error: matchings render as ascii or tikz", file=sys.stderr)
            return 2
        return 0
    if isinstance(obj, dict) and "tableau_graph" in obj:
        if args.format != "dot":
            print("error: tableau graphs render as dot", file=sys.stderr)
            return 2
        n = int(obj["tableau_graph"])
        if n < 1:
            raise ValueError("tableau_graph size must be positive")
        _emit(args, tableau_graph_dot(build_tableau_graph(n)))
        return 0
    print('error: object must contain "arcs" or "tableau_graph"', file=sys.stderr)
    return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cupweb",
        description="Exact two-row tableau / cup diagram calculus",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_n=True):
        if with_n:
            p.add_argument("-n", type=_positive, required=True,
                           help="half the number of boxes/dots")
            p.add_argument("--max-n", type=_positive, default=DEFAULT_MAX_N,
                           help="resource limit on n (default %(default)s)")
            p.add_argument("--force", action="store_true",
                           help="lift the resource limit to the requested n")
        p.add_argument("-o", "--output", default=None,
                       help="output file (default stdout)")

    p = sub.add_parser("enumerate", help="list all tableaux with their ranks")
    add_common(p)
    p.add_argument("--format", choices=["json", "ascii"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("graph", help="export the tableau graph")
    add_common(p)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("matrix", help="export the transition matrix")
    add_common(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("inverse", help="export the inverse transition matrix")
    add_common(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("resolve", help="resolve a matching into cup diagrams")
    add_common(p, with_n=False)
    p.add_argument("matching", help='matching JSON, @file, or "-" for stdin')
    p.add_argument("--strategy", default="first",
                   help="'first' or 'scripted:i,j,...' (default first)")
    p.add_argument("--node-budget", type=_positive, default=10**6)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("witness", help="move script from a column matching to a cup")
    add_common(p, with_n=False)
    p.add_argument("tableau_t", help="tableau T as JSON (source matching)")
    p.add_argument("tableau_s", help="tableau S as JSON (target cup diagram)")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="run the verification suites")
    add_common(p)
    p.add_argument("which",
                   choices=["unitriangular", "positivity", "psi",
                            "conjecture", "all"])
    p.add_argument("--self-test", action="store_true",
                   help="corrupt one entry first; the run must then fail")
    p.add_argument("--step-budget", type=_positive, default=10**6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a matching or the tableau graph")
    add_common(p, with_n=False)
    p.add_argument("object", help="matching JSON or {\"tableau_graph\": n}")
    p.add_argument("--format", choices=["ascii", "tikz", "dot"],
                   default="ascii")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
