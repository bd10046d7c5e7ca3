#!/usr/bin/env python3
"""Run the three scaling sweeps and report how each phase scales.

Writes one CSV per sweep into the output directory, then prints a
cubic fit of the solve phase against cell count for the size sweep and
flatness diagnostics (linear R^2, max/min ratio) for the obstacle and
source sweeps.

The full run at default settings takes roughly 45 minutes on a desktop
class machine; almost all of it is the 11-point obstacle and source
sweeps at 60x60. Pass --quick for a small smoke-scale version.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from gridplan import bench
from gridplan.bench import ScenarioConfig, fit_polynomial, loglog_slope


def progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def phase_medians(records, scenario: str, phase: str):
    """(x, seconds) pairs for one phase, x being the swept parameter."""
    xs, ys = [], []
    for r in records:
        if r.scenario != scenario or r.phase != phase:
            continue
        if scenario == "size":
            xs.append(r.width * r.height)
        elif scenario == "obstacles":
            xs.append(r.num_obstacles)
        else:
            xs.append(r.num_sources)
        ys.append(r.seconds)
    return xs, ys


def report_size(records) -> None:
    print("\nsize sweep (x = cell count)")
    for phase in bench.PHASES:
        xs, ys = phase_medians(records, "size", phase)
        fit = fit_polynomial(xs, ys, 3)
        slope = loglog_slope(xs, ys)
        coeffs = " ".join("%.3g" % c for c in fit.coefficients)
        print("  %-8s cubic R^2 %.6f  loglog slope %.3f  coeffs [%s]"
              % (phase, fit.r_squared, slope, coeffs))


def report_flat(records, scenario: str, label: str) -> None:
    print("\n%s sweep (x = %s)" % (scenario, label))
    for phase in bench.PHASES:
        xs, ys = phase_medians(records, scenario, phase)
        fit = fit_polynomial(xs, ys, 1)
        ratio = max(ys) / min(ys)
        print("  %-8s linear R^2 %.6f  max/min %.3f"
              % (phase, fit.r_squared, ratio))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="bench_results",
                    help="directory for the CSV files")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--reps", type=int, default=5,
                    help="timed repetitions per configuration")
    ap.add_argument("--full", action="store_true",
                    help="extend the size sweep to 100x100")
    ap.add_argument("--quick", action="store_true",
                    help="tiny fields and sparse sweeps, for smoke runs")
    args = ap.parse_args(argv)

    if args.quick:
        configs = [
            ScenarioConfig.size_sweep(seed=args.seed, reps=args.reps,
                                      sides=(8, 12, 16, 20)),
            ScenarioConfig(scenario="obstacles", params=(1, 20, 40, 60),
                           seed=args.seed, reps=args.reps,
                           width=16, height=16),
            ScenarioConfig(scenario="sources", params=(1, 5, 20, 50),
                           seed=args.seed, reps=args.reps,
                           width=16, height=16),
        ]
    else:
        sides = (10, 20, 30, 40, 50, 60, 70, 80, 90, 100) if args.full \
            else bench.SIZE_SIDES
        configs = [
            ScenarioConfig.size_sweep(seed=args.seed, reps=args.reps,
                                      sides=sides),
            ScenarioConfig.obstacle_sweep(seed=args.seed, reps=args.reps),
            ScenarioConfig.source_sweep(seed=args.seed, reps=args.reps),
        ]

    os.makedirs(args.out_dir, exist_ok=True)
    t0 = time.perf_counter()
    for config in configs:
        records = bench.run_scenario(config, progress=progress)
        out = os.path.join(args.out_dir, "%s.csv" % config.scenario)
        bench.write_records_csv(records, out)
        print("wrote %s (%d rows)" % (out, len(records)))
        if config.scenario == "size":
            report_size(records)
        elif config.scenario == "obstacles":
            report_flat(records, "obstacles", "obstacle count")
        else:
            report_flat(records, "sources", "source count")
    print("\ntotal wall time %.1f s" % (time.perf_counter() - t0))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
