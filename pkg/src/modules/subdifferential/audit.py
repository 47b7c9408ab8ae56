"""
Auditorías de las descripciones directas contra la eliminación genérica
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple

from src.core.extended import MINUS_INF, PLUS_INF
from src.core.lattice import IntegralBox
from src.modules.functions.model import TableFunction
from src.modules.subdifferential.fourier_motzkin import (
    interval_of_rational_system,
    project_fourier_motzkin,
)
from src.modules.subdifferential.iq import Interval, build_iq
from src.modules.subdifferential.reduction import fm_reduced_system, reduced_slice
from src.modules.subdifferential.system import InequalitySystem, build_subgradient_system

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjectionAudit:
    """
    Resultado de comparar dos descripciones de las proyecciones

    Attributes:
        holds: Todos los cortes coinciden
        level: Nivel del primer desacuerdo
        tail: Cola del primer desacuerdo
        direct: Intervalo de la descripción directa
        generic: Intervalo de la eliminación genérica
        checked: Número de cortes comparados
    """

    holds: bool
    level: Optional[int] = None
    tail: Optional[Tuple[Fraction, ...]] = None
    direct: Optional[Interval] = None
    generic: Optional[Interval] = None
    checked: int = 0


def _same(a: Interval, b: Interval) -> bool:
    if a.is_empty or b.is_empty:
        return a.is_empty and b.is_empty
    return a == b


def tail_grid(length: int, radius: int, step: Fraction = Fraction(1)) -> Iterator[Tuple[Fraction, ...]]:
    """Puntos de [-radius, radius]^length con paso `step`"""
    count = int(2 * radius / step)
    values = [Fraction(-radius) + k * step for k in range(count + 1)]
    return itertools.product(values, repeat=length)


def _grid_step(length: int) -> Fraction:
    return Fraction(1, 2) if length <= 1 else Fraction(1)


def iq_projection_audit(
    f: TableFunction,
    x: Sequence[int],
    box: Optional[IntegralBox] = None,
    radius: int = 3,
) -> ProjectionAudit:
    """
    IQ(ℓ) contra la proyección de ∂f(x) ∩ B por Fourier-Motzkin, para todo ℓ

    Los cortes se comparan en una grilla de colas racionales (paso 1/2
    con una variable libre, 1 en otro caso).
    """
    system = build_subgradient_system(f, x)
    box = box or IntegralBox.trivial(f.dimension)
    checked = 0
    for level in range(1, f.dimension + 1):
        iq = build_iq(system, box, level)
        projected = project_fourier_motzkin(system, box, level)
        length = f.dimension - level
        for tail in tail_grid(length, radius, _grid_step(length)):
            direct = iq.slice(tail)
            generic = interval_of_rational_system(projected, level, tail)
            checked += 1
            if not _same(direct, generic):
                logger.warning(
                    "IQ(%d) difiere de la proyección en %s: %s vs %s", level, tail, direct, generic
                )
                return ProjectionAudit(False, level, tail, direct, generic, checked)
    return ProjectionAudit(True, checked=checked)


def reduced_system_audit(system: InequalitySystem, radius: int = 3) -> ProjectionAudit:
    """Las cotas reducidas sin caja contra la proyección genérica, para todo ℓ"""
    levels = fm_reduced_system(system)
    plain = system.without_box()
    checked = 0
    for level in range(1, system.dimension + 1):
        projected = project_fourier_motzkin(plain, None, level)
        length = system.dimension - level
        for tail in tail_grid(length, radius, _grid_step(length)):
            direct = reduced_slice(levels, level, tail)
            generic = interval_of_rational_system(projected, level, tail)
            checked += 1
            if not _same(direct, generic):
                logger.warning(
                    "Nivel %d reducido difiere en %s: %s vs %s", level, tail, direct, generic
                )
                return ProjectionAudit(False, level, tail, direct, generic, checked)
    return ProjectionAudit(True, checked=checked)


def random_integral_box(rng, n: int, radius: int = 3) -> IntegralBox:
    """Caja aleatoria con extremos en [-radius, radius], a veces infinitos"""
    lower, upper = [], []
    for _ in range(n):
        a, b = sorted(rng.randint(-radius, radius) for _ in range(2))
        lower.append(a if rng.random() < 0.7 else MINUS_INF)
        upper.append(b if rng.random() < 0.7 else PLUS_INF)
    return IntegralBox(tuple(lower), tuple(upper))
