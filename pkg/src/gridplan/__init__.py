"""Shortest obstacle-free route planning on 2-D unit-grid fields.

Pipeline: a field of free and obstacle cells becomes a visibility graph
over cell centers (exact integer line-of-sight tests), an all-pairs
relaxation produces every shortest distance plus route-reconstruction
data, and a dispatcher picks the closest of several sources for a
destination. A benchmark harness times the pipeline across field-size,
obstacle-count, and source-count sweeps and fits the scaling curves.
"""

from .apsp import ApspResult, Path, dijkstra_oracle, floyd, reconstruct_path
from .bench import (BenchRecord, FitResult, ScenarioConfig, fit_polynomial,
                    loglog_slope, run_scenario, write_records_csv)
from .dispatch import DispatchResult, dispatch, select_closest
from .errors import (CapacityError, FieldFormatError, GridPlanError,
                     InvalidCellError, InvalidPlacementError, ShapeError)
from .field import (CellId, Field, Point, cell_center, field_to_text,
                    parse_field, random_field)
from .render import RenderSpec, render_svg
from .visibility import build_weight_matrix, visible

__version__ = "0.1.0"

__all__ = [
    "ApspResult", "BenchRecord", "CapacityError", "CellId", "DispatchResult",
    "Field", "FieldFormatError", "FitResult", "GridPlanError",
    "InvalidCellError", "InvalidPlacementError", "Path", "Point",
    "RenderSpec", "ScenarioConfig", "ShapeError", "build_weight_matrix",
    "cell_center", "dijkstra_oracle", "dispatch", "field_to_text",
    "fit_polynomial", "floyd", "loglog_slope", "parse_field", "random_field",
    "reconstruct_path", "render_svg", "run_scenario", "select_closest",
    "visible", "write_records_csv",
]
