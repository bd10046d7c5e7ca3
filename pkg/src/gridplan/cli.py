"""Command-line front end.

Subcommands: plan (single source route), dispatch (closest of several
sources), matrix (weight-matrix CSV dump), bench (timed sweeps), fit
(polynomial regression over a CSV), render (field SVG).

Exit codes: 0 success, 1 valid input but no route to the destination,
2 usage or input-format problems. Diagnostics go to stderr.

Numeric conventions: route lengths print with 9 decimal places; matrix
entries print with 9 significant digits and the literal token `inf` for
unreachable pairs.
"""

from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from . import bench
from .dispatch import dispatch
from .errors import GridPlanError
from .field import Field, parse_field
from .render import RenderSpec, render_svg
from .visibility import build_weight_matrix

FULL_SIZE_SIDES = (10, 20, 30, 40, 50, 60, 70, 80, 90, 100)


def _load_field(path: str) -> Field:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_field(fh.read())


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def format_length(value: float) -> str:
    if not np.isfinite(value):
        return "inf"
    return format(value, ".9f")


def matrix_to_csv_text(w) -> str:
    """Rows of 9-significant-digit entries, `inf` for unreachable, no
    header. Parsing this text back recovers the matrix via
    matrix_from_csv_text."""
    lines = []
    for row in np.asarray(w, dtype=np.float64):
        lines.append(",".join(
            "inf" if not np.isfinite(v) else format(v, ".9g") for v in row))
    return "\n".join(lines) + "\n"


def matrix_from_csv_text(text: str):
    rows = []
    for line in text.splitlines():
        if not line:
            continue
        rows.append([float(tok) for tok in line.split(",")])
    if not rows:
        raise ValueError("empty matrix CSV")
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix CSV is not square")
    return np.array(rows, dtype=np.float64)


def _parse_id_list(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated cell ids, got {text!r}")


def _render_to_file(path, field, routes, sources, destination) -> None:
    spec = RenderSpec(field=field, paths=tuple(routes),
                      sources=tuple(sources), destination=destination)
    _write_text(path, render_svg(spec))


def cmd_plan(args) -> int:
    field = _load_field(args.field)
    result = dispatch(field, (args.source,), args.dest)
    dist, path = result.per_source[args.source]
    if args.svg:
        routes = (path,) if path is not None else ()
        _render_to_file(args.svg, field, routes, (args.source,), args.dest)
    if path is None:
        print("NO ROUTE")
        return 1
    print("path " + " ".join(str(c) for c in path.cells))
    print("length " + format_length(dist))
    return 0


def cmd_dispatch(args) -> int:
    field = _load_field(args.field)
    result = dispatch(field, args.sources, args.dest)
    if args.svg:
        order = sorted(result.per_source)
        routes = [result.per_source[s][1] for s in order
                  if result.per_source[s][1] is not None]
        _render_to_file(args.svg, field, routes, order, args.dest)
    for s in sorted(result.per_source):
        dist, path = result.per_source[s]
        line = f"source {s} length {format_length(dist)}"
        if path is not None:
            line += " path " + " ".join(str(c) for c in path.cells)
        print(line)
    if result.winner is None:
        print("NO ROUTE")
        return 1
    print(f"winner {result.winner}")
    return 0


def cmd_matrix(args) -> int:
    field = _load_field(args.field)
    text = matrix_to_csv_text(build_weight_matrix(field))
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    if args.scenario == "size":
        sides = FULL_SIZE_SIDES if args.full else bench.SIZE_SIDES
        config = bench.ScenarioConfig.size_sweep(seed=args.seed,
                                                 reps=args.reps, sides=sides)
    elif args.scenario == "obstacles":
        config = bench.ScenarioConfig.obstacle_sweep(seed=args.seed,
                                                     reps=args.reps)
    else:
        config = bench.ScenarioConfig.source_sweep(seed=args.seed,
                                                   reps=args.reps)
    records = bench.run_scenario(
        config, progress=lambda msg: print(msg, file=sys.stderr))
    text = bench.records_to_csv_text(records)
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_fit(args) -> int:
    xs = []
    ys = []
    with open(args.csv, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        fields = reader.fieldnames or []
        for col in (args.x, args.y):
            if col not in fields:
                raise ValueError(f"no column {col!r} in {args.csv}")
        for row in reader:
            xs.append(float(row[args.x]))
            ys.append(float(row[args.y]))
    fit = bench.fit_polynomial(xs, ys, args.degree)
    print("coefficients " + " ".join(format(c, ".9g")
                                     for c in fit.coefficients))
    print("r_squared " + format(fit.r_squared, ".9g"))
    return 0


def cmd_render(args) -> int:
    field = _load_field(args.field)
    _render_to_file(args.svg, field, (), (), None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridplan",
        description="Shortest obstacle-free routes on unit-grid fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan", help="route one source to a destination")
    p.add_argument("--field", required=True, help="field map file")
    p.add_argument("--source", type=int, required=True, help="source cell id")
    p.add_argument("--dest", type=int, required=True, help="destination cell id")
    p.add_argument("--svg", help="also render the result to this SVG file")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("dispatch", help="pick the closest of several sources")
    p.add_argument("--field", required=True, help="field map file")
    p.add_argument("--sources", type=_parse_id_list, required=True,
                   help="comma-separated source cell ids")
    p.add_argument("--dest", type=int, required=True, help="destination cell id")
    p.add_argument("--svg", help="also render the result to this SVG file")
    p.set_defaults(func=cmd_dispatch)

    p = sub.add_parser("matrix", help="dump the weight matrix as CSV")
    p.add_argument("--field", required=True, help="field map file")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("bench", help="run a timed scaling sweep")
    p.add_argument("--scenario", required=True,
                   choices=("size", "obstacles", "sources"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--out", help="output CSV file (default stdout)")
    p.add_argument("--full", action="store_true",
                   help="size scenario only: extend the sweep to 100x100")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("fit", help="fit a polynomial to CSV columns")
    p.add_argument("--csv", required=True, help="input CSV file")
    p.add_argument("--x", required=True, help="abscissa column name")
    p.add_argument("--y", required=True, help="ordinate column name")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("render", help="render a field map to SVG")
    p.add_argument("--field", required=True, help="field map file")
    p.add_argument("--svg", required=True, help="output SVG file")
    p.set_defaults(func=cmd_render)
    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (GridPlanError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
