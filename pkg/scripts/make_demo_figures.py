#!/usr/bin/env python3
"""Render example SVG figures: routed and unreachable small fields,
plus single- and multi-source routing on a 60x60 field.

The two 60x60 figures each need a full all-pairs solve, so expect
around a minute of compute after kernel warmup.
"""

from __future__ import annotations

import argparse
import os
import sys

from gridplan import RenderSpec, dispatch, render_svg
from gridplan.bench import setup_case


def write_svg(out_dir: str, name: str, spec: RenderSpec) -> None:
    path = os.path.join(out_dir, name)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(render_svg(spec))
    print("wrote %s" % path)


def routed_paths(result):
    return tuple(p for _, p in result.per_source.values() if p is not None)


def small_route(out_dir: str, seed: int) -> None:
    field, sources, dest = setup_case(10, 10, 20, 1, seed, 0)
    result = dispatch(field, sources, dest)
    write_svg(out_dir, "small_route.svg",
              RenderSpec(field=field, paths=routed_paths(result),
                         sources=sources, destination=dest, cell_pixels=32))


def small_no_route(out_dir: str) -> None:
    """Scan random 10x10 worlds with 20 obstacles until one has an
    unreachable destination, then render it without any path."""
    for seed in range(2000):
        field, sources, dest = setup_case(10, 10, 20, 1, seed, 0)
        result = dispatch(field, sources, dest)
        if result.winner is None:
            print("unreachable world found at seed %d" % seed,
                  file=sys.stderr)
            write_svg(out_dir, "small_no_route.svg",
                      RenderSpec(field=field, sources=sources,
                                 destination=dest, cell_pixels=32))
            return
    raise RuntimeError("no unreachable world in scanned seeds")


def large(out_dir: str, seed: int, num_sources: int, name: str) -> None:
    field, sources, dest = setup_case(60, 60, 100, num_sources, seed, 0)
    result = dispatch(field, sources, dest)
    write_svg(out_dir, name,
              RenderSpec(field=field, paths=routed_paths(result),
                         sources=sources, destination=dest, cell_pixels=12))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="figures")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--skip-large", action="store_true",
                    help="only render the fast 10x10 figures")
    args = ap.parse_args(argv)

    os.makedirs(args.out_dir, exist_ok=True)
    small_route(args.out_dir, args.seed)
    small_no_route(args.out_dir)
    if not args.skip_large:
        large(args.out_dir, args.seed, 1, "large_single_source.svg")
        large(args.out_dir, args.seed, 5, "large_five_sources.svg")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
