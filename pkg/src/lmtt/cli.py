"""Command-line interface.

Subcommands: validate, dist, curve, matrix, mds. Exit code 0 on success,
nonzero with a diagnostic on stderr for any error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import workbench
from .distance import lmtt_approx, lmtt_exact
from .geometry import GraphValidationError, validate
from .workbench import (
    DimensionTooLarge,
    ParseError,
    classical_mds,
    distance_curve,
    load_graph,
    pairwise_matrix,
    read_matrix_csv,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lmtt",
        description="Labeled merge tree transform distance between embedded graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a graph file")
    p.add_argument("graph")
    p.add_argument("--crossings", action="store_true", help="also reject crossing edges")

    p = sub.add_parser("dist", help="distance between two graphs")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.add_argument("--method", choices=["exact", "approx"], default="exact")
    p.add_argument("--samples", type=int, default=1000, help="approx sample count K")

    p = sub.add_parser("curve", help="per-direction distance curve as CSV")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.add_argument("--resolution", type=int, default=32, help="samples per arc")
    p.add_argument("--out", default="-", help="output CSV path (default stdout)")

    p = sub.add_parser("matrix", help="pairwise distance matrix for a corpus")
    p.add_argument("inputs", nargs="+", help="graph files, or a single directory")
    p.add_argument("--method", choices=["exact", "approx"], default="exact")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--out", default="-", help="output CSV path (default stdout)")
    p.add_argument("--jobs", type=int, default=None, help="parallel worker count")

    p = sub.add_parser("mds", help="classical MDS embedding of a matrix CSV")
    p.add_argument("matrix")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--out", default="-", help="output CSV path (default stdout)")
    return parser


def _resolve_inputs(inputs: list[str]) -> list[Path]:
    if len(inputs) == 1 and Path(inputs[0]).is_dir():
        files = sorted(Path(inputs[0]).glob("*.json"))
        if not files:
            raise ParseError(f"{inputs[0]}: no .json graph files found")
        return files
    return [Path(p) for p in inputs]


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _run(args: argparse.Namespace) -> int:
    if args.command == "validate":
        graph = load_graph(args.graph)
        if args.crossings:
            validate(graph, check_crossings=True)
        print(f"ok: {graph.n_vertices} vertices, {graph.n_edges} edges")
        return 0

    if args.command == "dist":
        g1, g2 = load_graph(args.graph1), load_graph(args.graph2)
        if args.method == "exact":
            result = lmtt_exact(g1, g2)
        else:
            result = lmtt_approx(g1, g2, args.samples)
        print(workbench.FLOAT_FMT % result.distance)
        if result.error_bound is not None:
            print(
                f"# method=approx samples={result.samples} "
                f"error_bound={workbench.FLOAT_FMT % result.error_bound}",
                file=sys.stderr,
            )
        return 0

    if args.command == "curve":
        g1, g2 = load_graph(args.graph1), load_graph(args.graph2)
        table = distance_curve(g1, g2, resolution=args.resolution)
        _emit(workbench.curve_csv_text(table), args.out)
        return 0

    if args.command == "matrix":
        paths = _resolve_inputs(args.inputs)
        dm = pairwise_matrix(
            paths, method=args.method, samples=args.samples, jobs=args.jobs
        )
        _emit(workbench.matrix_csv_text(dm), args.out)
        return 0

    if args.command == "mds":
        dm = read_matrix_csv(args.matrix)
        emb = classical_mds(dm, d=args.dim)
        _emit(workbench.embedding_csv_text(emb), args.out)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (ParseError, GraphValidationError, DimensionTooLarge, ValueError, OSError) as exc:
        print(f"lmtt: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
