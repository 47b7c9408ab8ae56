"""
Dualidad de Fenchel discreta: certificados, auditorías y brechas
"""
from src.modules.fenchel.duality import (
    DualityCertificate,
    FinitenessCheck,
    TraceEntry,
    conjugate_class_certificate,
    fenchel_certificate,
    finiteness_propagation_check,
    in_argmax_of_table,
    in_argmin_of_separable,
    local_minimum_check,
    minimize_difference,
    verify_certificate,
    weak_duality_audit,
)
from src.modules.fenchel.gap import (
    GapReport,
    continuous_dual_maximum,
    continuous_minimum,
    counterexample_gap_report,
    integer_dual_maximum,
)

__all__ = [
    "DualityCertificate",
    "FinitenessCheck",
    "TraceEntry",
    "conjugate_class_certificate",
    "fenchel_certificate",
    "finiteness_propagation_check",
    "in_argmax_of_table",
    "in_argmin_of_separable",
    "local_minimum_check",
    "minimize_difference",
    "verify_certificate",
    "weak_duality_audit",
    "GapReport",
    "continuous_dual_maximum",
    "continuous_minimum",
    "counterexample_gap_report",
    "integer_dual_maximum",
]
