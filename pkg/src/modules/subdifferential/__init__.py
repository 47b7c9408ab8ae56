"""
Subdiferenciales de funciones integralmente convexas y subgradientes enteros
"""
from src.modules.subdifferential.audit import (
    ProjectionAudit,
    iq_projection_audit,
    random_integral_box,
    reduced_system_audit,
)
from src.modules.subdifferential.extraction import (
    ExtractionResult,
    ExtractionStep,
    extract_integral_subgradient,
    has_integral_subgradient,
    integral_subgradient_in_box,
    round_subgradient,
    rounding_box,
)
from src.modules.subdifferential.fourier_motzkin import (
    RationalSystem,
    generic_fourier_motzkin,
    interval_of_rational_system,
    is_empty_by_elimination,
    project_fourier_motzkin,
)
from src.modules.subdifferential.iq import IQRow, IQSystem, Interval, RowKind, build_iq
from src.modules.subdifferential.reduction import (
    BoundTerm,
    LevelBounds,
    fm_reduced_system,
    naive_box_intervals,
    reduced_slice,
)
from src.modules.subdifferential.system import (
    Inequality,
    InequalitySystem,
    build_subgradient_system,
    membership_check,
)
from src.modules.subdifferential.vertices import enumerate_vertices, is_integral_vertex

__all__ = [
    "ProjectionAudit",
    "iq_projection_audit",
    "random_integral_box",
    "reduced_system_audit",
    "ExtractionResult",
    "ExtractionStep",
    "extract_integral_subgradient",
    "has_integral_subgradient",
    "integral_subgradient_in_box",
    "round_subgradient",
    "rounding_box",
    "RationalSystem",
    "generic_fourier_motzkin",
    "interval_of_rational_system",
    "is_empty_by_elimination",
    "project_fourier_motzkin",
    "IQRow",
    "IQSystem",
    "Interval",
    "RowKind",
    "build_iq",
    "BoundTerm",
    "LevelBounds",
    "fm_reduced_system",
    "naive_box_intervals",
    "reduced_slice",
    "Inequality",
    "InequalitySystem",
    "build_subgradient_system",
    "membership_check",
    "enumerate_vertices",
    "is_integral_vertex",
]
