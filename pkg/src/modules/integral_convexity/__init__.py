"""
Convexidad integral: vecindarios, extensión local y verificaciones
"""
from src.modules.integral_convexity.checks import (
    ConvexityResult,
    envelope_sum_check,
    half_integer_cell_points,
    is_hole_free,
    is_integrally_convex_function,
    is_integrally_convex_set,
)
from src.modules.integral_convexity.extension import (
    NeighborhoodSystem,
    convex_envelope,
    in_convex_hull,
    in_local_hull,
    integral_neighborhood,
    local_extension,
)
from src.modules.integral_convexity.sampling import sample_local_not_global, sample_table

__all__ = [
    "ConvexityResult",
    "envelope_sum_check",
    "half_integer_cell_points",
    "is_hole_free",
    "is_integrally_convex_function",
    "is_integrally_convex_set",
    "NeighborhoodSystem",
    "convex_envelope",
    "in_convex_hull",
    "in_local_hull",
    "integral_neighborhood",
    "local_extension",
    "sample_local_not_global",
    "sample_table",
]
