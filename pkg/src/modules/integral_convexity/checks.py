"""
Certificación de convexidad integral de conjuntos y funciones
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from src.config.settings import settings
from src.core.extended import ExtendedInteger, ext
from src.core.lattice import IntegralBox, LatticePoint, RationalVector, sup_distance
from src.modules.functions.model import TableFunction, add_tables, tabulate
from src.modules.integral_convexity.extension import (
    in_convex_hull,
    in_local_hull,
    local_extension,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvexityResult:
    """
    Resultado de una verificación de convexidad integral

    Attributes:
        holds: La propiedad se cumple
        witness: Punto racional que viola la condición
        pair: Par (x, y) cuyo punto medio es el testigo, si lo hay
        extension_value: f~ en el testigo (sólo para funciones)
    """

    holds: bool
    witness: Optional[RationalVector] = None
    pair: Optional[Tuple[LatticePoint, LatticePoint]] = None
    extension_value: Optional[ExtendedInteger] = None

    def __bool__(self) -> bool:
        return self.holds


def _midpoint(x: Sequence[int], y: Sequence[int]) -> RationalVector:
    return tuple(Fraction(a + b, 2) for a, b in zip(x, y))


def _ordered_pairs(points: Sequence[LatticePoint]) -> Iterator[Tuple[LatticePoint, LatticePoint]]:
    """x en orden decreciente, y creciente con y < x"""
    ascending = sorted(points)
    for x in reversed(ascending):
        for y in ascending:
            if y >= x:
                break
            yield x, y


def _half_integer_grid(box: IntegralBox) -> Iterator[RationalVector]:
    ranges = [
        range(2 * lo.value, 2 * hi.value + 1) for lo, hi in zip(box.lower, box.upper)
    ]
    for doubled in itertools.product(*ranges):
        yield tuple(Fraction(c, 2) for c in doubled)


def is_hole_free(points: Iterable[Sequence[int]]) -> bool:
    """S = conv(S) ∩ Z^n, por enumeración sobre la caja envolvente"""
    points = sorted({tuple(p) for p in points})
    members = set(points)
    for y in IntegralBox.bounding(points).points():
        if y not in members and in_convex_hull(points, y):
            return False
    return True


def is_integrally_convex_set(points: Iterable[Sequence[int]]) -> ConvexityResult:
    """
    x ∈ conv(S) implica x ∈ conv(S ∩ N(x))

    Se prueban primero los puntos medios de todos los pares de S y luego,
    hasta settings.SET_CHECK_MAX_DIMENSION, la grilla semientera de la
    caja envolvente.
    """
    points = sorted({tuple(p) for p in points})
    if not points:
        raise ValueError("El conjunto debe ser no vacío")
    box = IntegralBox.bounding(points)
    if len(points) == sum(1 for _ in box.points()):
        return ConvexityResult(True)

    seen = set()
    for x, y in _ordered_pairs(points):
        z = _midpoint(x, y)
        if z in seen:
            continue
        seen.add(z)
        if not in_local_hull(points, z):
            logger.info("Conjunto no integralmente convexo: par %s, %s", x, y)
            return ConvexityResult(False, z, (x, y))

    if len(box.lower) <= settings.SET_CHECK_MAX_DIMENSION:
        for z in _half_integer_grid(box):
            if z in seen:
                continue
            if not in_local_hull(points, z) and in_convex_hull(points, z):
                logger.info("Conjunto no integralmente convexo en %s", z)
                return ConvexityResult(False, z)
    else:
        logger.warning(
            "Dimensión %d: verificación de conjunto sólo con puntos medios", len(box.lower)
        )
    return ConvexityResult(True)


def is_integrally_convex_function(f: TableFunction, mode: str = "c") -> ConvexityResult:
    """
    Condición (c): dom f integralmente convexo y
    f~((x+y)/2) <= (f(x)+f(y))/2 para ||x - y||inf = 2

    El modo "b" prueba la misma desigualdad para todo ||x - y||inf >= 2.
    """
    if mode not in ("b", "c"):
        raise ValueError(f"Modo desconocido: {mode}")
    domain_result = is_integrally_convex_set(f.domain)
    if not domain_result:
        value = None
        if domain_result.witness is not None:
            value = local_extension(f, domain_result.witness)
        return ConvexityResult(False, domain_result.witness, domain_result.pair, value)

    for x, y in _ordered_pairs(list(f.domain)):
        distance = sup_distance(x, y)
        if distance < 2 or (mode == "c" and distance != 2):
            continue
        z = _midpoint(x, y)
        value = local_extension(f, z)
        if value > ext(Fraction(f.entries[x] + f.entries[y], 2)):
            logger.info("Desigualdad del punto medio falla para %s, %s", x, y)
            return ConvexityResult(False, z, (x, y), value)
    return ConvexityResult(True)


def envelope_sum_check(
    f: TableFunction, phi, samples: Iterable[Sequence]
) -> bool:
    """
    overline{f + Phi} = overline{f} + overline{Phi} en cada muestra

    Phi se tabula sobre la caja envolvente de dom f.
    """
    phi_table = tabulate(phi, f.bounding_box().points())
    total = add_tables(f, phi_table)
    for z in samples:
        lhs = local_extension(total, z)
        rhs = local_extension(f, z) + local_extension(phi_table, z)
        if lhs != rhs:
            logger.info("Suma de envolventes difiere en %s: %s != %s", tuple(z), lhs, rhs)
            return False
    return True


def half_integer_cell_points(f: TableFunction) -> Iterator[RationalVector]:
    """Puntos de la grilla semientera de la caja envolvente de dom f"""
    return _half_integer_grid(f.bounding_box())
