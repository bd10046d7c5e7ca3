"""Timed sweeps over field size, obstacle count, and source count, plus
the regression helpers used to quantify how runtime scales.

Methodology notes. Each configuration gets one discarded warmup run,
then `reps` timed runs; the recorded figure is the per-phase median.
Timed runs are interleaved across configurations in shuffled rounds so
slow machine-state drift (thermal throttling, background load) spreads
over the whole sweep instead of biasing one end of it. Kernels are
compiled before anything is timed.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

import numpy as np

from . import _kernels, apsp, visibility
from .dispatch import select_closest
from .errors import CapacityError
from .field import Field, random_field

SCENARIOS = ("size", "obstacles", "sources", "demo")
PHASES = ("build_w", "floyd", "extract", "total")

SIZE_SIDES = (10, 20, 30, 40, 50, 60)
OBSTACLE_COUNTS = (1, 100, 200, 300, 400, 500, 600, 700, 800, 900, 1000)
SOURCE_COUNTS = (1, 5, 10, 20, 50, 100, 200, 400, 500, 600, 1000)

CSV_HEADER = ("scenario", "width", "height", "obstacles", "sources",
              "seed", "phase", "reps", "seconds")


@dataclass(frozen=True)
class BenchRecord:
    """One (configuration, phase) timing row."""

    scenario: str
    width: int
    height: int
    num_obstacles: int
    num_sources: int
    seed: int
    phase: str
    seconds: float
    reps: int


@dataclass(frozen=True)
class FitResult:
    """Least-squares polynomial fit: coefficients in ascending power
    order (always degree + 1 of them) and the coefficient of
    determination."""

    degree: int
    coefficients: tuple
    r_squared: float


@dataclass(frozen=True)
class ScenarioConfig:
    """A sweep: which parameter varies, over which values.

    Fixed-side parameters default to the 60x60 / 100-obstacle / single
    source setup that the obstacle and source sweeps share.
    """

    scenario: str
    params: tuple
    seed: int = 0
    reps: int = 5
    width: int = 60
    height: int = 60
    num_obstacles: int = 100
    num_sources: int = 1

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise ValueError(f"unknown scenario {self.scenario!r}")
        if not self.params:
            raise ValueError("scenario needs at least one parameter value")
        low = 0 if self.scenario == "obstacles" else 1
        if any(int(p) < low for p in self.params):
            raise ValueError("parameter values out of range")
        if self.reps < 1:
            raise ValueError("reps must be positive")

    @classmethod
    def size_sweep(cls, seed: int = 0, reps: int = 5,
                   sides: tuple = SIZE_SIDES) -> "ScenarioConfig":
        return cls(scenario="size", params=tuple(sides), seed=seed, reps=reps)

    @classmethod
    def obstacle_sweep(cls, seed: int = 0, reps: int = 5,
                       counts: tuple = OBSTACLE_COUNTS) -> "ScenarioConfig":
        return cls(scenario="obstacles", params=tuple(counts), seed=seed,
                   reps=reps)

    @classmethod
    def source_sweep(cls, seed: int = 0, reps: int = 5,
                     counts: tuple = SOURCE_COUNTS) -> "ScenarioConfig":
        return cls(scenario="sources", params=tuple(counts), seed=seed,
                   reps=reps)

    @classmethod
    def demo(cls, seed: int = 0, reps: int = 5,
             sides: tuple = (10, 60)) -> "ScenarioConfig":
        return cls(scenario="demo", params=tuple(sides), seed=seed, reps=reps)

    def cases(self) -> list:
        """Concrete (width, height, num_obstacles, num_sources) per
        parameter value.

        In the size sweeps the fixed obstacle count is capped by the
        room a small field actually has once sources and the destination
        are placed (a 10x10 field cannot hold 100 obstacles and still
        leave two free cells). A swept obstacle count is never capped;
        an infeasible one raises during setup instead.
        """
        out = []
        for p in self.params:
            p = int(p)
            if self.scenario == "size":
                room = p * p - self.num_sources - 1
                out.append((p, p, min(self.num_obstacles, room),
                            self.num_sources))
            elif self.scenario == "obstacles":
                out.append((self.width, self.height, p, self.num_sources))
            elif self.scenario == "sources":
                out.append((self.width, self.height, self.num_obstacles, p))
            else:
                base = 20 if p == 10 else 100
                room = p * p - self.num_sources - 1
                out.append((p, p, min(base, room), self.num_sources))
        return out


def setup_case(width: int, height: int, num_obstacles: int,
               num_sources: int, seed: int, index: int):
    """Deterministic world for one sweep point: pick destination and
    sources first, then scatter obstacles over the remaining cells.

    Returns (field, sources, dest). The stream is keyed by (seed, index)
    so each sweep point has an independent, reproducible draw.
    """
    n = width * height
    if num_sources + 1 > n:
        raise CapacityError(
            f"{num_sources} sources plus a destination exceed {n} cells")
    rng = np.random.default_rng([seed % 2**64, index])
    picks = rng.choice(n, size=num_sources + 1, replace=False) + 1
    dest = int(picks[0])
    sources = tuple(sorted(int(c) for c in picks[1:]))
    field = random_field(width, height, num_obstacles,
                         excluded=set(int(c) for c in picks),
                         seed=int(rng.integers(2**63)))
    return field, sources, dest


def run_pipeline(field: Field, sources, dest) -> dict:
    """One timed end-to-end run. Returns phase -> seconds."""
    t0 = time.perf_counter()
    w = visibility.build_weight_matrix(field)
    t1 = time.perf_counter()
    result = apsp.floyd(w)
    t2 = time.perf_counter()
    select_closest(result, field, sources, dest)
    t3 = time.perf_counter()
    return {"build_w": t1 - t0, "floyd": t2 - t1,
            "extract": t3 - t2, "total": t3 - t0}


def run_scenario(config: ScenarioConfig, progress=None) -> list:
    """Execute a sweep and return one BenchRecord per (case, phase).

    `progress`, when given, is called with a short status string before
    every timed round.
    """
    cases = config.cases()
    worlds = [setup_case(w, h, obs, src, config.seed, i)
              for i, (w, h, obs, src) in enumerate(cases)]
    _kernels.warm()

    order_rng = np.random.default_rng([config.seed % 2**64, 0xBE7C])
    timings = [{phase: [] for phase in PHASES} for _ in cases]
    # Round 0 is the warmup: same shape as a timed round, results dropped.
    for rnd in range(config.reps + 1):
        if progress is not None:
            label = "warmup" if rnd == 0 else f"round {rnd}/{config.reps}"
            progress(f"{config.scenario}: {label}")
        order = order_rng.permutation(len(cases))
        for ci in order:
            field, sources, dest = worlds[ci]
            sample = run_pipeline(field, sources, dest)
            if rnd == 0:
                continue
            for phase in PHASES:
                timings[ci][phase].append(sample[phase])

    records = []
    for ci, (w, h, obs, src) in enumerate(cases):
        for phase in PHASES:
            records.append(BenchRecord(
                scenario=config.scenario, width=w, height=h,
                num_obstacles=obs, num_sources=src, seed=config.seed,
                phase=phase,
                seconds=float(np.median(timings[ci][phase])),
                reps=config.reps))
    return records


def write_records_csv(records, out) -> None:
    """Write records to a file path or text stream. LF line endings,
    '.' decimal separator, 9 significant digits on seconds."""
    if isinstance(out, (str, bytes)):
        with open(out, "w", encoding="utf-8", newline="") as fh:
            write_records_csv(records, fh)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([r.scenario, r.width, r.height, r.num_obstacles,
                         r.num_sources, r.seed, r.phase, r.reps,
                         format(r.seconds, ".9g")])


def records_to_csv_text(records) -> str:
    buf = io.StringIO()
    write_records_csv(records, buf)
    return buf.getvalue()


def read_records_csv(path) -> list:
    """Parse a records CSV back into BenchRecord values."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or tuple(reader.fieldnames) != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {reader.fieldnames}")
        out = []
        for row in reader:
            out.append(BenchRecord(
                scenario=row["scenario"], width=int(row["width"]),
                height=int(row["height"]), num_obstacles=int(row["obstacles"]),
                num_sources=int(row["sources"]), seed=int(row["seed"]),
                phase=row["phase"], seconds=float(row["seconds"]),
                reps=int(row["reps"])))
        return out


def _residual_floor(ys: np.ndarray) -> float:
    # Scale-relative cutoff below which sums of squares count as zero.
    scale = 1e-9 * max(1.0, float(np.max(np.abs(ys))))
    return scale * scale * ys.size


def fit_polynomial(xs, ys, degree: int) -> FitResult:
    """Least-squares polynomial fit with R^2.

    Fitting runs on a scaled domain (orthogonal-style stabilization) so
    abscissas up to 1e4 with cubes up to 1e12 stay well conditioned,
    then coefficients are mapped back to the plain power basis.
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if int(degree) != degree or degree < 0:
        raise ValueError("degree must be a nonnegative integer")
    degree = int(degree)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise ValueError("xs and ys must be 1-D and the same length")
    if xs.size < degree + 1:
        raise ValueError(
            f"need at least {degree + 1} points for degree {degree}, got {xs.size}")
    if np.all(xs == xs[0]):
        raise ValueError("xs must not all be identical")

    fitted = np.polynomial.Polynomial.fit(xs, ys, degree)
    coeffs = fitted.convert().coef
    if coeffs.size < degree + 1:
        coeffs = np.pad(coeffs, (0, degree + 1 - coeffs.size))
    predicted = fitted(xs)

    ss_res = float(np.sum((ys - predicted) ** 2))
    ss_tot = float(np.sum((ys - ys.mean()) ** 2))
    floor = _residual_floor(ys)
    if ss_tot <= floor:
        r_squared = 1.0 if ss_res <= floor else float("-inf")
    else:
        r_squared = 1.0 - ss_res / ss_tot
    return FitResult(degree=degree,
                     coefficients=tuple(float(c) for c in coeffs),
                     r_squared=r_squared)


def loglog_slope(xs, ys) -> float:
    """Least-squares slope of log(ys) against log(xs)."""
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if xs.shape != ys.shape or xs.ndim != 1 or xs.size < 2:
        raise ValueError("need two equal-length 1-D samples of >= 2 points")
    if np.any(xs <= 0) or np.any(ys <= 0):
        raise ValueError("log-log slope needs strictly positive values")
    fit = np.polynomial.Polynomial.fit(np.log(xs), np.log(ys), 1)
    return float(fit.convert().coef[1])
