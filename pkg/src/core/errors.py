"""
Jerarquía de excepciones de la librería

Cada excepción lleva el código de salida que usa la CLI:
2 precondición / infactible, 3 error de lectura, 4 inconsistencia interna.
"""
from typing import Optional


class DiscreteDualityError(Exception):
    """Error base de todas las operaciones"""

    exit_code: int = 2


class OppositeInfinities(DiscreteDualityError):
    """Suma de +inf y -inf"""

    exit_code = 4


class DimensionMismatch(DiscreteDualityError):
    """Vectores o funciones con dimensiones distintas"""


class PointOutsideDomain(DiscreteDualityError):
    """El punto no pertenece al dominio efectivo"""


class EmptyIntersection(DiscreteDualityError):
    """dom f y dom Psi no se intersectan"""


class NotIntegrallyConvex(DiscreteDualityError):
    """Una verificación de consistencia detectó una entrada no integralmente convexa"""

    exit_code = 4


class InternalInfeasible(DiscreteDualityError):
    """Un sistema garantizado como factible resultó vacío"""

    exit_code = 4


class UnboundedRegion(DiscreteDualityError):
    """La región poliédrica no es acotada"""


class UnboundedEnumeration(DiscreteDualityError):
    """No se puede acotar la enumeración de puntos enteros"""


class InfeasiblePrecondition(DiscreteDualityError):
    """La precondición de factibilidad no se cumple"""


class BoxTooSmall(DiscreteDualityError):
    """La caja dual no contiene todos los óptimos"""


class UnsupportedDimension(DiscreteDualityError):
    """Operación disponible sólo en dimensión baja"""


class InvalidFunction(DiscreteDualityError):
    """Tabla o pieza univariada mal formada"""

    exit_code = 3


class ParseError(DiscreteDualityError):
    """
    Archivo de instancia ilegible

    Attributes:
        line: Línea del error (1-based) si se conoce
        column: Columna del error (1-based) si se conoce
    """

    exit_code = 3

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f" (línea {line}, columna {column})"
        super().__init__(f"{message}{location}")
