"""Static SVG rendering of fields, routes, sources, and destinations.

Output is plain hand-assembled SVG text, byte-identical for identical
inputs: element order is fixed (cells row-major, then routes, then
sources in ascending id order, then the destination) and every number
goes through one formatter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .apsp import Path
from .field import CellId, Field, cell_center

FREE_FILL = "#ffffff"
OBSTACLE_FILL = "#3b3b3b"
GRID_STROKE = "#b9b9b9"
PATH_STROKE = "#1f6fd6"
SOURCE_FILL = "#2ca02c"
DEST_FILL = "#d62728"


@dataclass(frozen=True)
class RenderSpec:
    """What to draw: the field plus optional routes and markers."""

    field: Field
    paths: tuple = ()
    sources: tuple = ()
    destination: CellId | None = None
    cell_pixels: int = 24


def _fmt(value: float) -> str:
    return format(value, "g")


def _center_px(cell: CellId, field: Field, cp: int) -> tuple:
    c = cell_center(cell, field)
    return c.x * cp, c.y * cp


def render_svg(spec: RenderSpec) -> str:
    """Serialize a RenderSpec to an SVG document string."""
    field = spec.field
    cp = spec.cell_pixels
    if not isinstance(cp, int) or isinstance(cp, bool) or cp <= 0:
        raise ValueError(f"cell_pixels must be a positive integer, got {cp!r}")
    for path in spec.paths:
        if not isinstance(path, Path):
            raise ValueError(f"paths must contain Path values, got {path!r}")
        for cell in path.cells:
            field.check_cell(cell)
    for cell in spec.sources:
        field.check_cell(cell)
    if spec.destination is not None:
        field.check_cell(spec.destination)

    width_px = field.width * cp
    height_px = field.height * cp
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" '
        f'height="{height_px}" viewBox="0 0 {width_px} {height_px}">'
    ]
    for row in range(field.height):
        for col in range(field.width):
            cell = field.cell_at(row, col)
            fill = OBSTACLE_FILL if field.is_obstacle(cell) else FREE_FILL
            parts.append(
                f'<rect x="{col * cp}" y="{row * cp}" width="{cp}" '
                f'height="{cp}" fill="{fill}" stroke="{GRID_STROKE}" '
                f'stroke-width="1"/>')
    for path in spec.paths:
        pts = " ".join(
            f"{_fmt(x)},{_fmt(y)}"
            for x, y in (_center_px(c, field, cp) for c in path.cells))
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{PATH_STROKE}" '
            f'stroke-width="2"/>')
    marker_r = _fmt(cp * 0.25)
    for cell in sorted(set(spec.sources)):
        x, y = _center_px(cell, field, cp)
        parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{marker_r}" '
            f'fill="{SOURCE_FILL}"/>')
    if spec.destination is not None:
        x, y = _center_px(spec.destination, field, cp)
        parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{marker_r}" '
            f'fill="{DEST_FILL}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
