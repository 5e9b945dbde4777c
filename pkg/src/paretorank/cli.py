"""Command-line interface.

Commands: indicators, rank, score, compare, kernel.  Exit codes: 0 success,
1 parse or configuration error (including empty input), 2 computational
precondition violation (disconnected graph without --component largest).
All real numbers are printed with six decimals; JSON output carries a
schema tag so downstream consumers can detect format changes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .analysis import extract_kernel
from .centrality import INDICATOR_NAMES, DisconnectedGraphError, score_table
from .coverage import CoverageReport, coverage_report
from .graphio import (
    Graph,
    ParseError,
    connected_components,
    largest_component,
    read_graph,
    write_graph,
)
from .linkanalysis import (
    RankedSequence,
    hits,
    pagerank,
    parse_score_file,
    scores_for_graph,
    to_ranked_sequence,
)
from .pareto import DEFAULT_TOL, EquivalenceClasses, rank_nodes

JSON_SCHEMA = "paretorank/1"


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _real(x: float) -> str:
    return f"{float(x):.6f}"


def _jreal(x: float) -> float:
    return round(float(x), 6)


def _emit_table(header: list[str], rows: list[list[str]], out) -> None:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    out.write("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip() + "\n")


def _emit_tsv(header: list[str], rows: list[list[str]], out) -> None:
    out.write("\t".join(header) + "\n")
    for row in rows:
        out.write("\t".join(row) + "\n")


def _emit(fmt: str, header: list[str], rows: list[list[str]], payload: dict, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "tsv":
        _emit_tsv(header, rows, out)
    else:
        _emit_table(header, rows, out)


def _load_graph(args) -> Graph:
    g = read_graph(args.graph, fmt=args.input_format)
    if g.n == 0:
        raise ParseError(f"{args.graph}: empty graph")
    return g


def _connected_graph(g: Graph, args) -> Graph:
    comps = connected_components(g)
    if len(comps) <= 1:
        return g
    if getattr(args, "component", None) == "largest":
        sub, _ = largest_component(g)
        return sub
    raise DisconnectedGraphError(
        f"graph has {len(comps)} components; pass --component largest "
        "to rank the largest one"
    )


def _benchmark(g: Graph, args) -> EquivalenceClasses:
    table = score_table(g, nk=args.nk, threads=args.threads)
    method = "fast" if getattr(args, "fast", False) else "naive"
    return rank_nodes(table.values, tol=args.tol, method=method)


def _cmd_indicators(args) -> int:
    g = _connected_graph(_load_graph(args), args)
    table = score_table(g, nk=args.nk, threads=args.threads)
    header = ["node", *INDICATOR_NAMES]
    rows = [
        [g.labels[i], *(_real(table.values[i, k]) for k in range(4))]
        for i in range(g.n)
    ]
    payload = {
        "schema": JSON_SCHEMA,
        "command": "indicators",
        "nodes": list(g.labels),
        "indicators": {
            name: [_jreal(v) for v in table.values[:, k]]
            for k, name in enumerate(INDICATOR_NAMES)
        },
    }
    _emit(args.format, header, rows, payload, sys.stdout)
    return 0


def _cmd_rank(args) -> int:
    g = _connected_graph(_load_graph(args), args)
    classes = _benchmark(g, args)
    header = ["class", "nodes"]
    rows = [
        [str(k + 1), " ".join(g.labels[i] for i in members)]
        for k, members in enumerate(classes.classes)
    ]
    payload = {
        "schema": JSON_SCHEMA,
        "command": "rank",
        "classes": [[g.labels[i] for i in members] for members in classes.classes],
    }
    _emit(args.format, header, rows, payload, sys.stdout)
    return 0


def _cmd_score(args) -> int:
    g = _load_graph(args)
    if args.algo == "pagerank":
        scores = pagerank(g, jump=args.jump, sweeps=args.iters or 200)
    else:
        scores = hits(g, max_iter=args.iters or 500)
    ranked = to_ranked_sequence(scores, tie_tol=args.tie_tol)
    group_of = {}
    for k, members in enumerate(ranked.groups, start=1):
        for i in members:
            group_of[i] = k
    header = ["node", "score", "group"]
    rows = [[g.labels[i], _real(scores[i]), str(group_of[i])] for i in range(g.n)]
    payload = {
        "schema": JSON_SCHEMA,
        "command": "score",
        "algo": args.algo,
        "nodes": list(g.labels),
        "scores": [_jreal(s) for s in scores],
        "groups": [[g.labels[i] for i in members] for members in ranked.groups],
    }
    _emit(args.format, header, rows, payload, sys.stdout)
    return 0


def _ranking_for(token: str, g: Graph, table_values: np.ndarray, args) -> RankedSequence:
    if token == "pagerank":
        return to_ranked_sequence(pagerank(g, jump=args.jump, sweeps=args.iters or 200), args.tie_tol)
    if token == "hits":
        return to_ranked_sequence(hits(g, max_iter=args.iters or 500), args.tie_tol)
    if token in INDICATOR_NAMES:
        return to_ranked_sequence(table_values[:, INDICATOR_NAMES.index(token)], args.tie_tol)
    if token.startswith("file:"):
        path = token[5:]
        with open(path, "rb") as fh:
            mapping = parse_score_file(fh)
        return to_ranked_sequence(scores_for_graph(g, mapping), args.tie_tol)
    raise ValueError(
        f"unknown algorithm {token!r}; expected pagerank, hits, an indicator "
        f"name ({', '.join(INDICATOR_NAMES)}), or file:PATH"
    )


def _cmd_compare(args) -> int:
    g = _connected_graph(_load_graph(args), args)
    table = score_table(g, nk=args.nk, threads=args.threads)
    method = "fast" if getattr(args, "fast", False) else "naive"
    bench = rank_nodes(table.values, tol=args.tol, method=method)
    tokens = [t.strip() for t in args.against.split(",") if t.strip()]
    if not tokens:
        raise ValueError("--against lists no algorithms")
    results: list[tuple[str, CoverageReport]] = []
    for token in tokens:
        ranked = _ranking_for(token, g, table.values, args)
        results.append((token, coverage_report(ranked, bench)))
    header = ["algorithm", "best", "worst", "certratio"]
    rows = [
        [name, _real(r.best_coverage), _real(r.worst_coverage), _real(r.certratio)]
        for name, r in results
    ]
    payload = {
        "schema": JSON_SCHEMA,
        "command": "compare",
        "max_distance": results[0][1].max_distance if results else 0,
        "results": [
            {
                "algorithm": name,
                "best": _jreal(r.best_coverage),
                "worst": _jreal(r.worst_coverage),
                "certratio": _jreal(r.certratio),
                "distance_best": r.distance_best,
                "distance_worst": r.distance_worst,
                "degenerate": r.degenerate,
            }
            for name, r in results
        ],
    }
    _emit(args.format, header, rows, payload, sys.stdout)
    return 0


def _cmd_kernel(args) -> int:
    g = _connected_graph(_load_graph(args), args)
    table = score_table(g, nk=args.nk, threads=args.threads)
    bench = rank_nodes(table.values, tol=args.tol, method="fast")
    report = extract_kernel(g, bench, args.top)
    if args.out is not None:
        if args.out_file is None:
            raise ValueError("--out requires --out-file PATH")
        with open(args.out_file, "w", encoding="utf-8") as fh:
            fh.write(write_graph(report.kernel, args.out))
    payload = {
        "schema": JSON_SCHEMA,
        "command": "kernel",
        "classes_included": report.classes_included,
        "node_count": report.node_count,
        "edge_count": report.edge_count,
        "avg_degree_kernel": _jreal(report.avg_degree_kernel),
        "edges_per_node_full": _jreal(report.edges_per_node_full),
        "nodes": [report.kernel.labels[i] for i in range(report.kernel.n)],
    }
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return 0


def _add_common(p: argparse.ArgumentParser, *, nk=False, tol=False, tie=False,
                pr=False, fast=False, component=False, fmt=True) -> None:
    p.add_argument("graph", help="path to an edge-list or GML network file")
    p.add_argument("--input-format", choices=["edgelist", "gml"], default=None,
                   help="override format detection by file extension")
    if fmt:
        p.add_argument("--format", choices=["table", "tsv", "json"], default="table",
                       help="output format (default: table)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker threads for per-source passes (default: cores)")
    if nk:
        p.add_argument("--nk", type=float, default=1.0,
                       help="neighbors-indicator exponent (default: 1)")
    if tol:
        p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                       help="relative tolerance for indicator ties (default: 1e-9)")
    if tie:
        p.add_argument("--tie-tol", type=float, default=1e-12,
                       help="absolute tolerance for score ties (default: 1e-12)")
    if pr:
        p.add_argument("--jump", type=float, default=0.15,
                       help="pagerank teleport probability (default: 0.15)")
        p.add_argument("--iters", type=int, default=None,
                       help="pagerank sweeps / hits iteration cap (defaults: 200 / 500)")
    if fast:
        p.add_argument("--fast", action="store_true",
                       help="use the compiled layered sorter (identical classes)")
    if component:
        p.add_argument("--component", choices=["largest"], default=None,
                       help="on a disconnected graph, rank the largest component")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="paretorank",
                     description="Benchmark node rankings by non-dominated sorting "
                                 "over centrality indicators.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indicators", help="print the four indicator scores per node")
    _add_common(p, nk=True, component=True)
    p.set_defaults(func=_cmd_indicators)

    p = sub.add_parser("rank", help="benchmark equivalence classes of all nodes")
    _add_common(p, nk=True, tol=True, fast=True, component=True)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("score", help="run pagerank or hits and group tied nodes")
    _add_common(p, tie=True, pr=True)
    p.add_argument("--algo", choices=["pagerank", "hits"], required=True)
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("compare", help="coverage of ranking algorithms vs the benchmark")
    _add_common(p, nk=True, tol=True, tie=True, pr=True, fast=True, component=True)
    p.add_argument("--against", required=True,
                   help="comma list: pagerank,hits,degree,betweenness,closeness,"
                        "neighbors,file:PATH")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("kernel", help="extract the induced subgraph of the top classes")
    _add_common(p, nk=True, tol=True, component=True, fmt=False)
    p.add_argument("--top", type=int, required=True, help="number of top classes to keep")
    p.add_argument("--out", choices=["dot", "edgelist"], default=None,
                   help="also write the kernel graph in this format")
    p.add_argument("--out-file", default=None, help="path for the kernel graph file")
    p.set_defaults(func=_cmd_kernel)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except DisconnectedGraphError as e:
        print(f"paretorank: {e}", file=sys.stderr)
        return 2
    except (ParseError, OSError, ValueError, KeyError) as e:
        print(f"paretorank: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
