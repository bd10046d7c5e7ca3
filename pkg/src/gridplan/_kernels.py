"""Numba kernels for the two hot loops: weight-matrix build and the
all-pairs relaxation. Geometry uses doubled integer coordinates so every
blocking decision is exact; see visibility.py for the predicate contract.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def segment_touches_square(ax, ay, bx, by, x0, y0, x1, y1):
    # Closed-closed intersection: bounding boxes must overlap and the
    # square must not lie strictly on one side of the segment's line.
    if max(ax, bx) < x0 or min(ax, bx) > x1:
        return False
    if max(ay, by) < y0 or min(ay, by) > y1:
        return False
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


@njit(cache=True)
def build_weights(xs, ys, is_obstacle, ox0, oy0):
    """Pairwise weight matrix from doubled center coordinates.

    xs, ys: doubled cell-center coordinates (odd integers), row-major.
    ox0, oy0: doubled lower corners of obstacle squares.
    """
    n = xs.size
    m = ox0.size
    w = np.empty((n, n), np.float64)
    for i in range(n):
        w[i, i] = 0.0
    for i in range(n):
        ax = xs[i]
        ay = ys[i]
        blocked_row = is_obstacle[i]
        for j in range(i + 1, n):
            if blocked_row or is_obstacle[j]:
                w[i, j] = np.inf
                w[j, i] = np.inf
                continue
            bx = xs[j]
            by = ys[j]
            blocked = False
            for t in range(m):
                if segment_touches_square(ax, ay, bx, by, ox0[t], oy0[t], ox0[t] + 2, oy0[t] + 2):
                    blocked = True
                    break
            if blocked:
                w[i, j] = np.inf
                w[j, i] = np.inf
            else:
                dx = float(bx - ax)
                dy = float(by - ay)
                dist = 0.5 * np.sqrt(dx * dx + dy * dy)
                w[i, j] = dist
                w[j, i] = dist
    return w


@njit(cache=True)
def floyd_relax(d, p):
    """In-place k-outer relaxation with strict improvement.

    p[i, j] receives the 1-based id of the last k that strictly improved
    the pair; 0 means the direct edge was never improved. Row k and column
    k never change during iteration k, so in-place updates are safe. An
    infinite d[i, k] or d[k, j] makes alt infinite and the strict compare
    false, so unreachable intermediates never update anything.
    """
    n = d.shape[0]
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i, k]
            di = d[i]
            pi = p[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
                    pi[j] = k + 1


def warm():
    """Compile the kernels on a trivial input (first call in a fresh
    environment otherwise pays JIT latency inside a timed run)."""
    xs = np.array([1, 3], np.int64)
    ys = np.array([1, 1], np.int64)
    obs = np.zeros(2, np.bool_)
    w = build_weights(xs, ys, obs, np.empty(0, np.int64), np.empty(0, np.int64))
    p = np.zeros((2, 2), np.int32)
    floyd_relax(w.copy(), p)
