"""
Aritmética exacta y primitivas de retículo
"""
from src.core.extended import (
    MINUS_INF,
    PLUS_INF,
    ExtendedInteger,
    Kind,
    ext,
    ext_add,
)
from src.core.lattice import (
    IntegralBox,
    LatticePoint,
    Rational,
    RationalVector,
    box_contains,
    directions,
    inner,
    lattice_point,
    rational_vector,
)

__all__ = [
    "MINUS_INF",
    "PLUS_INF",
    "ExtendedInteger",
    "Kind",
    "ext",
    "ext_add",
    "IntegralBox",
    "LatticePoint",
    "Rational",
    "RationalVector",
    "box_contains",
    "directions",
    "inner",
    "lattice_point",
    "rational_vector",
]
