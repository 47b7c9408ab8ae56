"""
Eliminación de Fourier-Motzkin genérica sobre racionales exactos

Sólo poda duplicados: filas con el mismo vector de coeficientes
normalizado conservan el menor lado derecho.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

from src.core.errors import DimensionMismatch
from src.core.extended import ext
from src.core.lattice import IntegralBox, inner
from src.modules.subdifferential.iq import Interval
from src.modules.subdifferential.system import InequalitySystem

logger = logging.getLogger(__name__)

RationalRow = Tuple[Tuple[Fraction, ...], Fraction]


@dataclass(frozen=True)
class RationalSystem:
    """
    Sistema c·p <= d con coeficientes racionales

    Attributes:
        dimension: Número de variables (las eliminadas quedan con coeficiente 0)
        rows: Filas normalizadas (max |c_j| = 1), sin filas nulas ni duplicadas
        infeasible: Alguna fila nula tenía lado derecho negativo
    """

    dimension: int
    rows: Tuple[RationalRow, ...]
    infeasible: bool = False

    @classmethod
    def from_rows(cls, dimension: int, rows: Iterable[Tuple[Sequence, object]]) -> "RationalSystem":
        best: Dict[Tuple[Fraction, ...], Fraction] = {}
        infeasible = False
        for coefficients, rhs in rows:
            coefficients = tuple(Fraction(c) for c in coefficients)
            if len(coefficients) != dimension:
                raise DimensionMismatch("Fila de dimensión incorrecta")
            rhs = Fraction(rhs)
            scale = max((abs(c) for c in coefficients), default=Fraction(0))
            if scale == 0:
                infeasible = infeasible or rhs < 0
                continue
            key = tuple(c / scale for c in coefficients)
            rhs = rhs / scale
            if key not in best or rhs < best[key]:
                best[key] = rhs
        return cls(dimension, tuple(sorted(best.items())), infeasible)

    @classmethod
    def from_inequality_system(
        cls, system: InequalitySystem, box: Optional[IntegralBox] = None
    ) -> "RationalSystem":
        """A p <= b más las filas finitas de la caja"""
        n = system.dimension
        box = box or system.box
        rows = [(row.coefficients, row.rhs) for row in system.rows]
        for j in range(n):
            unit = tuple(int(k == j) for k in range(n))
            if box.upper[j].is_finite:
                rows.append((unit, box.upper[j].value))
            if box.lower[j].is_finite:
                rows.append((tuple(-u for u in unit), -box.lower[j].value))
        return cls.from_rows(n, rows)

    def satisfied_by(self, p: Sequence) -> bool:
        return not self.infeasible and all(inner(c, p) <= d for c, d in self.rows)

    def __len__(self) -> int:
        return len(self.rows)


def generic_fourier_motzkin(system: RationalSystem, variable: int) -> RationalSystem:
    """
    Elimina p_variable (1-based) combinando cada fila positiva con cada negativa

    La región del resultado es exactamente la proyección de la original.
    """
    index = variable - 1
    if not 0 <= index < system.dimension:
        raise DimensionMismatch(f"Variable p{variable} fuera de rango")
    positive, negative, rest = [], [], []
    for coefficients, rhs in system.rows:
        c = coefficients[index]
        if c > 0:
            positive.append((tuple(v / c for v in coefficients), rhs / c))
        elif c < 0:
            negative.append((tuple(v / -c for v in coefficients), rhs / -c))
        else:
            rest.append((coefficients, rhs))
    for pc, pr in positive:
        for nc, nr in negative:
            rest.append((tuple(a + b for a, b in zip(pc, nc)), pr + nr))
    projected = RationalSystem.from_rows(system.dimension, rest)
    if system.infeasible:
        projected = RationalSystem(projected.dimension, projected.rows, True)
    logger.debug(
        "FM sobre p%d: %d+%d filas -> %d filas", variable, len(positive), len(negative), len(projected)
    )
    return projected


def project_fourier_motzkin(
    system: InequalitySystem, box: Optional[IntegralBox] = None, level: int = 1
) -> RationalSystem:
    """
    Proyección de {A p <= b} ∩ B sobre (p_ℓ, ..., p_n)

    level = n + 1 elimina todas las variables; el resultado es infactible
    si y sólo si el poliedro es vacío.
    """
    projected = RationalSystem.from_inequality_system(system, box)
    for variable in range(1, level):
        projected = generic_fourier_motzkin(projected, variable)
    return projected


def interval_of_rational_system(system: RationalSystem, level: int, tail: Sequence) -> Interval:
    """
    Intervalo de p_ℓ en un sistema ya proyectado sobre (p_ℓ, ..., p_n)

    Vacío si el sistema es infactible o si la cola viola una fila sin p_ℓ.
    """
    index = level - 1
    if len(tail) != system.dimension - level:
        raise DimensionMismatch(f"Cola de largo {len(tail)} para el nivel {level}")
    if system.infeasible:
        return Interval.empty()
    tail = tuple(Fraction(v) for v in tail)
    interval = Interval.unbounded()
    lower, upper = interval.lower, interval.upper
    for coefficients, rhs in system.rows:
        if any(coefficients[:index]):
            raise ValueError(f"El sistema aún contiene variables anteriores a p{level}")
        c = coefficients[index]
        slack = rhs - inner(coefficients[level:], tail)
        if c > 0:
            upper = min(upper, ext(slack / c))
        elif c < 0:
            lower = max(lower, ext(slack / c))
        elif slack < 0:
            return Interval.empty()
    return Interval(lower, upper)


def is_empty_by_elimination(system: InequalitySystem, box: Optional[IntegralBox] = None) -> bool:
    """{A p <= b} ∩ B = ∅, decidido eliminando todas las variables"""
    return project_fourier_motzkin(system, box, system.dimension + 1).infeasible
