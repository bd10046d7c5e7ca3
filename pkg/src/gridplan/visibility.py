"""Line-of-sight tests between cell centers and construction of the
pairwise weight matrix.

Two centers see each other when the closed segment between them touches
no obstacle cell, where each obstacle occupies the closed unit square of
its cell. Closed-square contact means a segment that merely grazes an
obstacle corner or slides along its edge is blocked. Centers sit at
half-integer coordinates, so doubling every coordinate puts the whole
test in integers and the predicate is exact.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import CapacityError
from .field import CellId, Field


def _doubled_centers(field: Field) -> tuple[np.ndarray, np.ndarray]:
    # Center of (row, col) is (col + 0.5, row + 0.5); doubled: (2c+1, 2r+1).
    ids = np.arange(field.n_cells, dtype=np.int64)
    rows = ids // field.width
    cols = ids % field.width
    return 2 * cols + 1, 2 * rows + 1


def _doubled_obstacle_corners(field: Field) -> tuple[np.ndarray, np.ndarray]:
    # Obstacle square for (row, col) spans [col, col+1] x [row, row+1];
    # doubled lower corner is (2c, 2r).
    obs = np.array(sorted(field.obstacles), dtype=np.int64)
    rows = (obs - 1) // field.width
    cols = (obs - 1) % field.width
    return 2 * cols, 2 * rows


def segment_touches_square(ax: int, ay: int, bx: int, by: int,
                           x0: int, y0: int, x1: int, y1: int) -> bool:
    """Exact closed-segment vs closed-axis-aligned-box test on integers.

    True when the segment from (ax, ay) to (bx, by) shares at least one
    point with [x0, x1] x [y0, y1], boundary included on both sides.
    """
    if max(ax, bx) < x0 or min(ax, bx) > x1:
        return False
    if max(ay, by) < y0 or min(ay, by) > y1:
        return False
    # With boxes overlapping, the segment misses the square only if all
    # four corners lie strictly on one side of the segment's line.
    dx = bx - ax
    dy = by - ay
    o1 = dx * (y0 - ay) - dy * (x0 - ax)
    o2 = dx * (y0 - ay) - dy * (x1 - ax)
    o3 = dx * (y1 - ay) - dy * (x0 - ax)
    o4 = dx * (y1 - ay) - dy * (x1 - ax)
    if o1 > 0 and o2 > 0 and o3 > 0 and o4 > 0:
        return False
    if o1 < 0 and o2 < 0 and o3 < 0 and o4 < 0:
        return False
    return True


def visible(a: CellId, b: CellId, field: Field) -> bool:
    """Whether the centers of cells a and b have unobstructed line of
    sight. Obstacle cells themselves are never visible endpoints. A cell
    always sees itself when free."""
    field.check_cell(a)
    field.check_cell(b)
    if field.is_obstacle(a) or field.is_obstacle(b):
        return False
    ra, ca = field.cell_rc(a)
    rb, cb = field.cell_rc(b)
    ax, ay = 2 * ca + 1, 2 * ra + 1
    bx, by = 2 * cb + 1, 2 * rb + 1
    for obs in field.obstacles:
        ro, co = field.cell_rc(obs)
        x0, y0 = 2 * co, 2 * ro
        if segment_touches_square(ax, ay, bx, by, x0, y0, x0 + 2, y0 + 2):
            return False
    return True


def build_weight_matrix(field: Field) -> np.ndarray:
    """Dense n x n matrix of center-to-center Euclidean distances, inf
    where line of sight is blocked or either endpoint is an obstacle.
    Symmetric, zero diagonal. Returned array is read-only."""
    n = field.n_cells
    xs, ys = _doubled_centers(field)
    is_obs = np.zeros(n, dtype=np.bool_)
    if field.obstacles:
        is_obs[np.fromiter(field.obstacles, dtype=np.int64) - 1] = True
    ox, oy = _doubled_obstacle_corners(field)
    try:
        w = _kernels.build_weights(xs, ys, is_obs, ox, oy)
    except MemoryError as exc:
        raise CapacityError(
            f"weight matrix for {n} cells does not fit in memory") from exc
    w.flags.writeable = False
    return w
