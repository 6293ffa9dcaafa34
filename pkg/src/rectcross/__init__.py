"""Exact rectilinear crossing numbers of planar point sets, with batch evaluators
for every single-point removal, insertion and relocation."""
from ._backend import current as backend
from .delta import DeltaResult, batch_add, batch_move, batch_remove
from .errors import (CapacityError, CollinearPoints, CollinearWithAnchor, DuplicatePoint,
                     Exhausted, GeometryError, InconsistentCounts, NotAMember, OrderMismatch,
                     OverlapError)
from .geom import (COORD_BOUND, Point, PointSet, orientation, parse_points, read_points,
                   validate_general_position, write_points)
from .lambdas import (LambdaMatrix, PatternCounts, crossing_number, crossing_number_from_lambda,
                      crossing_number_oracle, f_sum, lambda_matrix, left_weight_sums,
                      pattern_counts)
from .radial import RadialOrder, all_radial_orders, radial_order_around

__all__ = [
    "COORD_BOUND", "CapacityError", "CollinearPoints", "CollinearWithAnchor", "DeltaResult",
    "DuplicatePoint", "Exhausted", "GeometryError", "InconsistentCounts", "LambdaMatrix",
    "NotAMember", "OrderMismatch", "OverlapError", "PatternCounts", "Point", "PointSet",
    "RadialOrder", "all_radial_orders", "backend", "batch_add", "batch_move", "batch_remove",
    "crossing_number", "crossing_number_from_lambda", "crossing_number_oracle", "f_sum",
    "lambda_matrix", "left_weight_sums", "orientation", "parse_points", "pattern_counts",
    "radial_order_around", "read_points", "validate_general_position", "write_points",
]
