"""Packing Delta-regular caterpillars into k-planar host graphs.

Caterpillars are drawn on n points in convex position; rotated zig-zag
drawings give packings whose crossing count per edge is bounded.
"""
from .caterpillar import (
    Caterpillar,
    RegularParams,
    make_center_caterpillar,
    make_regular_caterpillar,
    placement_exists,
)
from .errors import (
    CaterpackError,
    ConstructionError,
    DegenerateGeometryError,
    InfeasibleError,
    ParameterError,
    PreconditionError,
    VerificationError,
)
from .layout import INNER, OUTER, ConvexDrawing, rotate, zigzag_drawing
from .packing import PackingLayout, pack_divisible, pack_mixed, place_copies, place_three_2planar
from .verify import CrossingReport, crossing_counts, k_of

__all__ = [
    "Caterpillar", "RegularParams", "make_center_caterpillar", "make_regular_caterpillar",
    "placement_exists", "CaterpackError", "ConstructionError", "DegenerateGeometryError",
    "InfeasibleError", "ParameterError", "PreconditionError", "VerificationError",
    "INNER", "OUTER", "ConvexDrawing", "rotate", "zigzag_drawing", "PackingLayout",
    "pack_divisible", "pack_mixed", "place_copies", "place_three_2planar",
    "CrossingReport", "crossing_counts", "k_of",
]
__version__ = "0.1.0"
