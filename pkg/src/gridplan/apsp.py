"""All-pairs shortest paths over the visibility weight matrix.

The solver relaxes every pair through every intermediate vertex in a
fixed k-outer order and records, per pair, the last intermediate that
strictly improved it. Routes are reconstructed by recursively splitting
at that intermediate. A separate single-source solver (repeated min
scans over the same matrix) exists purely as a cross-check and shares no
code with the main solver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InvalidCellError, ShapeError
from .field import CellId, Field


@dataclass(frozen=True)
class ApspResult:
    """Distance matrix d and intermediate matrix p, both n x n.

    d[i, j] is the shortest center-to-center distance from cell i+1 to
    cell j+1 (inf when disconnected). p[i, j] is the 1-based id of the
    last intermediate vertex that improved the pair, 0 when the direct
    edge (or no finite route at all) stands.
    """

    d: np.ndarray
    p: np.ndarray

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def distance(self, a: CellId, b: CellId) -> float:
        self._check(a)
        self._check(b)
        return float(self.d[a - 1, b - 1])

    def _check(self, cell: CellId) -> None:
        if not isinstance(cell, (int, np.integer)) or isinstance(cell, bool):
            raise InvalidCellError(f"cell id must be an integer, got {cell!r}")
        if not 1 <= cell <= self.n:
            raise InvalidCellError(f"cell id {cell} outside 1..{self.n}")


@dataclass(frozen=True)
class Path:
    """A route as a tuple of cell ids plus its total length."""

    cells: tuple
    length: float


def floyd(w: np.ndarray) -> ApspResult:
    """Run the relaxation on a square weight matrix.

    The input is copied; the result's d starts as that copy and p starts
    all zero. Matrices in the result are read-only.
    """
    w = np.asarray(w, dtype=np.float64)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise ShapeError(f"weight matrix must be square, got {w.shape}")
    d = w.copy()
    p = np.zeros(w.shape, dtype=np.int32)
    _kernels.floyd_relax(d, p)
    d.flags.writeable = False
    p.flags.writeable = False
    return ApspResult(d=d, p=p)


def reconstruct_path(result: ApspResult, field: Field,
                     a: CellId, b: CellId) -> Path | None:
    """Expand the intermediate matrix into the cell sequence from a to b.

    Returns None when no finite route exists. A cell routes to itself by
    the single-cell route (length 0). Raises RuntimeError if the matrix
    is inconsistent (an intermediate equal to an endpoint, or a cycle).
    """
    if field.n_cells != result.n:
        raise ShapeError(
            f"field has {field.n_cells} cells but matrices are {result.n}x{result.n}")
    result._check(a)
    result._check(b)
    if a == b:
        return Path(cells=(a,), length=0.0)
    dist = result.d[a - 1, b - 1]
    if not np.isfinite(dist):
        return None
    p = result.p
    # Iterative expansion: each stack entry is a (u, v) leg still to be
    # split. Legs come out in route order because the right half is
    # pushed first.
    cells = [a]
    stack = [(a, b)]
    seen = set()
    while stack:
        u, v = stack.pop()
        if (u, v) in seen:
            raise RuntimeError(f"cycle while expanding route {a}->{b}")
        seen.add((u, v))
        k = int(p[u - 1, v - 1])
        if k == 0:
            cells.append(v)
            continue
        if k == u or k == v:
            raise RuntimeError(
                f"intermediate {k} equals an endpoint of leg {u}->{v}")
        stack.append((k, v))
        stack.append((u, k))
    return Path(cells=tuple(cells), length=float(dist))


def dijkstra_oracle(w: np.ndarray, source: CellId) -> np.ndarray:
    """Single-source distances by repeated minimum extraction.

    Independent of the all-pairs solver; used to cross-check it. Returns
    a length-n vector of distances from `source` (1-based).
    """
    w = np.asarray(w, dtype=np.float64)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise ShapeError(f"weight matrix must be square, got {w.shape}")
    n = w.shape[0]
    if not isinstance(source, (int, np.integer)) or isinstance(source, bool):
        raise InvalidCellError(f"source must be an integer, got {source!r}")
    if not 1 <= source <= n:
        raise InvalidCellError(f"source {source} outside 1..{n}")
    dist = np.full(n, np.inf)
    dist[source - 1] = 0.0
    done = np.zeros(n, dtype=bool)
    for _ in range(n):
        masked = np.where(done, np.inf, dist)
        u = int(np.argmin(masked))
        if not np.isfinite(masked[u]):
            break
        done[u] = True
        cand = dist[u] + w[u]
        better = cand < dist
        dist[better] = cand[better]
    return dist
