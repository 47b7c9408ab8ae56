"""
Funciones bisubmodulares: poliedros, fórmulas min-max y convolución
"""
from src.modules.bisubmodular.minmax import (
    MinMaxResult,
    box_convolution,
    build_psi_from_signed_pair,
    convolution_membership_audit,
    minmax_cgk,
    minmax_fp,
    signed_box_correction,
)
from src.modules.bisubmodular.model import (
    BisubFunction,
    BisubmodularityResult,
    SignedPair,
    box_function,
    enumerate_integer_points,
    format_pair,
    from_vector,
    is_bisubmodular,
    polyhedron_membership,
    sample_bisubmodular,
    signed_pairs,
    to_vector,
)

__all__ = [
    "MinMaxResult",
    "box_convolution",
    "build_psi_from_signed_pair",
    "convolution_membership_audit",
    "minmax_cgk",
    "minmax_fp",
    "signed_box_correction",
    "BisubFunction",
    "BisubmodularityResult",
    "SignedPair",
    "box_function",
    "enumerate_integer_points",
    "format_pair",
    "from_vector",
    "is_bisubmodular",
    "polyhedron_membership",
    "sample_bisubmodular",
    "signed_pairs",
    "to_vector",
]
