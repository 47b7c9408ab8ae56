"""
Extracción de subgradientes enteros en una caja por retro-sustitución
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.core.errors import NotIntegrallyConvex
from src.core.lattice import IntegralBox, LatticePoint, check_dimension, lattice_point
from src.modules.functions.model import TableFunction
from src.modules.subdifferential.iq import Interval, build_iq
from src.modules.subdifferential.system import build_subgradient_system, membership_check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtractionStep:
    """Nivel ℓ, su intervalo exacto y el valor entero elegido"""

    level: int
    interval: Interval
    value: Optional[int]


@dataclass(frozen=True)
class ExtractionResult:
    """
    Resultado de la retro-sustitución

    Attributes:
        point: Subgradiente entero en la caja, o None si ∂f(x) ∩ B = ∅
        steps: Pasos para ℓ = n, ..., 1
        box: Caja utilizada
    """

    point: Optional[LatticePoint]
    steps: Tuple[ExtractionStep, ...]
    box: IntegralBox

    @property
    def found(self) -> bool:
        return self.point is not None


def _pick(interval: Interval) -> int:
    """Extremo inferior si es finito, si no el superior, si no 0"""
    for endpoint in (interval.lower, interval.upper):
        if endpoint.is_finite:
            if not endpoint.is_integer:
                raise NotIntegrallyConvex(f"Extremo no entero {endpoint} en {interval}")
            return endpoint.value
    return 0


def extract_integral_subgradient(
    f: TableFunction, x: Sequence[int], box: Optional[IntegralBox] = None
) -> ExtractionResult:
    """
    Recorre ℓ = n, ..., 1 eligiendo p_ℓ entero en el intervalo de IQ(ℓ)

    Raises:
        PointOutsideDomain: Si x no pertenece a dom f
        NotIntegrallyConvex: Si un intervalo posterior resulta vacío o el
            punto final no es subgradiente
    """
    x = lattice_point(x)
    system = build_subgradient_system(f, x)
    n = f.dimension
    box = box or IntegralBox.trivial(n)
    check_dimension(n, box.lower, "caja")

    last = build_iq(system, box, n)
    if not all(row.satisfied_by((Fraction(0),)) for row in last.zero_rows):
        logger.info("∂f(%s) ∩ B vacío: fila constante violada en IQ(%d)", x, n)
        return ExtractionResult(None, (ExtractionStep(n, Interval.empty(), None),), box)

    tail: List[int] = []
    steps = []
    for level in range(n, 0, -1):
        iq = last if level == n else build_iq(system, box, level)
        interval = iq.projection_interval(tail)
        if interval.is_empty:
            steps.append(ExtractionStep(level, interval, None))
            if level == n:
                logger.info("∂f(%s) ∩ B vacío: p%d ∈ %s", x, n, interval)
                return ExtractionResult(None, tuple(steps), box)
            raise NotIntegrallyConvex(
                f"Intervalo vacío p{level} ∈ {interval} durante la retro-sustitución"
            )
        value = _pick(interval)
        steps.append(ExtractionStep(level, interval, value))
        tail.insert(0, value)
        logger.debug("p%d ∈ %s, elegido %d", level, interval, value)

    point = tuple(tail)
    if not membership_check(f, x, point) or not box.contains(point):
        raise NotIntegrallyConvex(f"{point} no es subgradiente de f en {x} dentro de {box}")
    return ExtractionResult(point, tuple(steps), box)


def integral_subgradient_in_box(
    f: TableFunction, x: Sequence[int], box: Optional[IntegralBox] = None
) -> Optional[LatticePoint]:
    """
    Un p entero en ∂f(x) ∩ B, o None si la intersección es vacía

    Raises:
        NotIntegrallyConvex: Si la verificación final falla
    """
    return extract_integral_subgradient(f, x, box).point


def has_integral_subgradient(f: TableFunction, x: Sequence[int]) -> bool:
    """∂f(x) ∩ Z^n != ∅, por extracción con la caja trivial"""
    try:
        return integral_subgradient_in_box(f, x) is not None
    except NotIntegrallyConvex:
        return False


def rounding_box(p: Sequence) -> IntegralBox:
    """[floor(p), ceil(p)]"""
    p = [Fraction(c) for c in p]
    return IntegralBox(
        tuple(math.floor(c) for c in p), tuple(math.ceil(c) for c in p)
    )


def round_subgradient(f: TableFunction, x: Sequence[int], p: Sequence) -> LatticePoint:
    """
    q ∈ ∂f(x) ∩ Z^n con floor(p) <= q <= ceil(p)

    Raises:
        NotIntegrallyConvex: Si no existe tal q
    """
    check_dimension(f.dimension, p, "vector dual")
    q = integral_subgradient_in_box(f, x, rounding_box(p))
    if q is None:
        raise NotIntegrallyConvex(f"Sin subgradiente entero alrededor de {tuple(p)}")
    return q

