"""Grid world model.

A field is a rectangular grid of unit cells. Cells are addressed by 1-based
row-major ids: id 1 is the top-left cell, ids increase left to right, then
top to bottom. Cell centers sit at half-integer coordinates, with x along
columns and y along rows (y grows downward).
"""

from dataclasses import dataclass, field as dc_field
from typing import Iterable, NamedTuple

import numpy as np

from .errors import CapacityError, FieldFormatError, InvalidCellError

CellId = int

FREE_CHAR = "."
OBSTACLE_CHAR = "#"


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Field:
    """Immutable grid with a set of obstacle cells.

    Obstacle ids must lie in [1, width * height].
    """

    width: int
    height: int
    obstacles: frozenset = dc_field(default_factory=frozenset)

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"field dimensions must be positive, got {self.width}x{self.height}")
        object.__setattr__(self, "obstacles", frozenset(self.obstacles))
        for c in self.obstacles:
            self.check_cell(c)

    @property
    def n_cells(self) -> int:
        return self.width * self.height

    def check_cell(self, cell: CellId) -> None:
        if not isinstance(cell, (int, np.integer)) or isinstance(cell, bool):
            raise InvalidCellError(f"cell id must be an integer, got {cell!r}")
        if not 1 <= cell <= self.n_cells:
            raise InvalidCellError(
                f"cell id {cell} outside 1..{self.n_cells} for {self.width}x{self.height} field"
            )

    def is_obstacle(self, cell: CellId) -> bool:
        self.check_cell(cell)
        return cell in self.obstacles

    def cell_rc(self, cell: CellId) -> tuple:
        """0-based (row, col) of a cell id."""
        self.check_cell(cell)
        return divmod(cell - 1, self.width)

    def cell_at(self, row: int, col: int) -> CellId:
        """Cell id of a 0-based (row, col) position."""
        if not (0 <= row < self.height and 0 <= col < self.width):
            raise InvalidCellError(f"position ({row}, {col}) outside {self.width}x{self.height} field")
        return row * self.width + col + 1


def cell_center(cell: CellId, field: Field) -> Point:
    """Geometric center of a cell, in unit-grid lengths."""
    row, col = field.cell_rc(cell)
    return Point(col + 0.5, row + 0.5)


def parse_field(text: str) -> Field:
    """Parse a field map: '.' free, '#' obstacle, one text row per grid row.

    The top grid row comes first. LF and CRLF line endings are accepted and a
    trailing newline is optional. Raises FieldFormatError for empty input,
    ragged rows, or characters outside the map alphabet.
    """
    if "\r" in text:
        normalized = text.replace("\r\n", "\n")
        if "\r" in normalized:
            raise FieldFormatError("stray carriage return in field map")
        text = normalized
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines = lines[:-1]
    if not lines:
        raise FieldFormatError("empty field map")
    width = len(lines[0])
    obstacles = []
    for r, line in enumerate(lines):
        if len(line) != width or width == 0:
            raise FieldFormatError(f"ragged field map: row {r + 1} has length {len(line)}, expected {width}")
        for c, ch in enumerate(line):
            if ch == OBSTACLE_CHAR:
                obstacles.append(r * width + c + 1)
            elif ch != FREE_CHAR:
                raise FieldFormatError(f"unexpected character {ch!r} at row {r + 1}, column {c + 1}")
    return Field(width, len(lines), frozenset(obstacles))


def field_to_text(field: Field) -> str:
    """Canonical map text for a field: LF endings, trailing newline."""
    rows = []
    for r in range(field.height):
        base = r * field.width
        rows.append(
            "".join(
                OBSTACLE_CHAR if base + c + 1 in field.obstacles else FREE_CHAR
                for c in range(field.width)
            )
        )
    return "\n".join(rows) + "\n"


def random_field(
    width: int,
    height: int,
    num_obstacles: int,
    excluded: Iterable = (),
    seed: int = 0,
) -> Field:
    """Field with obstacles drawn uniformly without replacement.

    Cells listed in `excluded` never receive an obstacle. The same seed and
    parameters always produce the same field. Raises CapacityError when the
    obstacles do not fit outside the excluded cells.
    """
    if width < 1 or height < 1:
        raise ValueError(f"field dimensions must be positive, got {width}x{height}")
    if num_obstacles < 0:
        raise ValueError(f"num_obstacles must be nonnegative, got {num_obstacles}")
    probe = Field(width, height)
    excluded_set = set()
    for c in excluded:
        probe.check_cell(c)
        excluded_set.add(int(c))
    candidates = np.setdiff1d(
        np.arange(1, width * height + 1, dtype=np.int64),
        np.fromiter(excluded_set, dtype=np.int64, count=len(excluded_set)),
    )
    if num_obstacles > candidates.size:
        raise CapacityError(
            f"cannot place {num_obstacles} obstacles on a {width}x{height} field "
            f"with {candidates.size} eligible cells"
        )
    rng = np.random.default_rng(seed % 2**64)
    chosen = rng.choice(candidates, size=num_obstacles, replace=False)
    return Field(width, height, frozenset(int(c) for c in chosen))
