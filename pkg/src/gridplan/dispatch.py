"""Multi-source selection: given several craft positions and one
destination, compute each shortest route and pick the closest craft.

One weight-matrix build and one all-pairs solve serve any number of
sources; adding sources only adds O(1) row lookups. The heavy work is
factored so benchmark code can time the extraction step separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import apsp, visibility
from .apsp import ApspResult, reconstruct_path
from .errors import InvalidPlacementError
from .field import CellId, Field


@dataclass(frozen=True)
class DispatchResult:
    """Per-source outcome plus the selected source.

    per_source maps each source cell to (distance, path); distance is
    inf and path is None when the destination is unreachable from it.
    winner is None only when every source is cut off. Ties go to the
    smallest cell id.
    """

    per_source: dict
    winner: CellId | None
    dest: CellId


def _checked_sources(field: Field, sources: Iterable[CellId],
                     dest: CellId) -> tuple:
    src = sorted(set(sources))
    if not src:
        raise ValueError("need at least one source cell")
    for cell in src:
        field.check_cell(cell)
        if field.is_obstacle(cell):
            raise InvalidPlacementError(f"source {cell} is an obstacle cell")
    field.check_cell(dest)
    if field.is_obstacle(dest):
        raise InvalidPlacementError(f"destination {dest} is an obstacle cell")
    return tuple(src)


def select_closest(result: ApspResult, field: Field,
                   sources: Iterable[CellId], dest: CellId) -> DispatchResult:
    """Pick the closest source from an already-computed solve.

    Extraction only: reads one distance per source and reconstructs each
    route. Sources and destination must be free cells.
    """
    src = _checked_sources(field, sources, dest)
    per_source = {}
    winner = None
    best = float("inf")
    for s in src:
        dist = result.distance(s, dest)
        path = reconstruct_path(result, field, s, dest)
        per_source[s] = (dist, path)
        if dist < best:
            best = dist
            winner = s
    return DispatchResult(per_source=per_source, winner=winner, dest=dest)


def dispatch(field: Field, sources: Iterable[CellId],
             dest: CellId) -> DispatchResult:
    """Full pipeline: build weights, solve all pairs once, then select.

    Exactly one all-pairs solve happens regardless of how many sources
    are given.
    """
    src = _checked_sources(field, sources, dest)
    w = visibility.build_weight_matrix(field)
    result = apsp.floyd(w)
    return select_closest(result, field, src, dest)
