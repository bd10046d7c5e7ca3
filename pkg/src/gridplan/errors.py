"""Exception types shared across the package."""


class GridPlanError(Exception):
    """Base class for all gridplan errors."""


class InvalidCellError(GridPlanError):
    """A cell id is outside the field, or not a positive integer."""


class FieldFormatError(GridPlanError):
    """Field map text is empty, ragged, or contains unknown characters."""


class CapacityError(GridPlanError):
    """Requested obstacles do not fit, or the field is too large to allocate."""


class InvalidPlacementError(GridPlanError):
    """A source or destination sits on an obstacle cell."""


class ShapeError(GridPlanError):
    """A weight matrix is not square."""
