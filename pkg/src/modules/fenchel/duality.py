"""
Dualidad de Fenchel discreta

    min { f(x) - Psi(x) : x ∈ Z^n } = max { Psi°(p) - f•(p) : p ∈ Z^n }

para f integralmente convexa y Psi separable cóncava. El óptimo dual se
construye a partir del primal: p* ∈ ∂f(x*) ∩ (-∂Phi(x*)) con Phi = -Psi.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

from src.core.errors import (
    BoxTooSmall,
    EmptyIntersection,
    InternalInfeasible,
    PointOutsideDomain,
)
from src.core.extended import MINUS_INF, PLUS_INF, ExtendedInteger, ext
from src.core.lattice import (
    IntegralBox,
    LatticePoint,
    add_points,
    directions,
    inner,
    lattice_point,
)
from src.modules.functions.conjugates import (
    concave_conjugate,
    convex_conjugate,
    integral_conjugate_table,
)
from src.modules.functions.model import TableFunction
from src.modules.functions.separable import (
    SeparableFunction,
    subdifferential_box_of_separable,
)
from src.modules.subdifferential.extraction import (
    ExtractionStep,
    extract_integral_subgradient,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceEntry:
    """Una verificación registrada en un certificado"""

    name: str
    holds: bool
    detail: str = ""


@dataclass(frozen=True)
class DualityCertificate:
    """
    Certificado de dualidad fuerte

    Attributes:
        primal_point: x*
        dual_point: p*
        primal_value: f(x*) - Psi(x*)
        dual_value: Psi°(p*) - f•(p*)
        trace: Verificaciones realizadas
        box: Caja -∂Phi(x*) usada para extraer p*
        steps: Pasos de la retro-sustitución
    """

    primal_point: LatticePoint
    dual_point: LatticePoint
    primal_value: int
    dual_value: int
    trace: Tuple[TraceEntry, ...] = ()
    box: Optional[IntegralBox] = None
    steps: Tuple[ExtractionStep, ...] = field(default=(), compare=False)

    @property
    def holds(self) -> bool:
        return self.primal_value == self.dual_value and all(e.holds for e in self.trace)


def minimize_difference(f: TableFunction, psi) -> Tuple[LatticePoint, int]:
    """
    min f - Psi sobre dom f, con desempate lexicográfico

    Raises:
        EmptyIntersection: Si dom f ∩ dom Psi = ∅
    """
    best: Optional[Tuple[LatticePoint, int]] = None
    for x, value in f.items():
        concave = psi.evaluate(x)
        if not concave.is_finite:
            continue
        difference = value - concave.value
        if best is None or difference < best[1]:
            best = (x, difference)
    if best is None:
        raise EmptyIntersection("dom f ∩ dom Psi es vacío")
    logger.debug("min f - Psi = %s en %s", best[1], best[0])
    return best


def local_minimum_check(f: TableFunction, x: Sequence[int]) -> bool:
    """
    f(x) <= f(x + d) para todo d ∈ {-1,0,+1}^n

    Raises:
        PointOutsideDomain: Si x no pertenece a dom f
    """
    x = lattice_point(x)
    if x not in f:
        raise PointOutsideDomain(f"{x} no pertenece a dom f")
    value = f.entries[x]
    for d in directions(f.dimension):
        y = add_points(x, d)
        if y in f and f.entries[y] < value:
            return False
    return True


def in_argmax_of_table(f: TableFunction, p: Sequence[int], x: Sequence[int]) -> bool:
    """x ∈ argmax { <p,y> - f(y) } por recorrido de dom f"""
    if x not in f:
        return False
    target = inner(p, x) - f.entries[tuple(x)]
    return all(inner(p, y) - v <= target for y, v in f.items())


def in_argmin_of_separable(psi: SeparableFunction, p: Sequence[int], x: Sequence[int]) -> bool:
    """
    x ∈ argmin { <p,y> - Psi(y) }

    Por coordenada k -> p_i k - psi_i(k) es convexa, así que basta
    comparar con k ± 1.
    """
    if not psi.in_domain(x):
        return False
    for piece, ell, k in zip(psi.pieces, p, x):
        here = ext(ell * k) - piece.evaluate(k)
        for neighbor in (k - 1, k + 1):
            if piece.contains(neighbor) and ext(ell * neighbor) - piece.evaluate(neighbor) < here:
                return False
    return True


def fenchel_certificate(f: TableFunction, psi: SeparableFunction) -> DualityCertificate:
    """
    Construye (x*, p*) y verifica la igualdad de ambos lados

    Raises:
        EmptyIntersection: Si dom f ∩ dom Psi = ∅
        InternalInfeasible: Si ∂f(x*) ∩ (-∂Phi(x*)) no tiene puntos o la
            verificación falla; indica que f no es integralmente convexa
    """
    x_star, primal_value = minimize_difference(f, psi)
    box = subdifferential_box_of_separable(psi.negated(), x_star)
    extraction = extract_integral_subgradient(f, x_star, box)
    if not extraction.found:
        raise InternalInfeasible(f"∂f({x_star}) ∩ {box} no contiene puntos")
    p_star = extraction.point

    argmax = in_argmax_of_table(f, p_star, x_star)
    argmin = in_argmin_of_separable(psi, p_star, x_star)
    dual = concave_conjugate(psi, p_star) - integral_conjugate_table(f, p_star)
    trace = (
        TraceEntry("argmax <p*,y> - f(y)", argmax, f"x* = {x_star}"),
        TraceEntry("argmin <p*,y> - Psi(y)", argmin, f"x* = {x_star}"),
        TraceEntry("dual = primal", dual == primal_value, f"{dual} = {primal_value}"),
    )
    if not all(entry.holds for entry in trace):
        failed = [entry.name for entry in trace if not entry.holds]
        raise InternalInfeasible(f"Certificado inválido: {', '.join(failed)}")
    logger.info("Certificado: x* = %s, p* = %s, valor %s", x_star, p_star, primal_value)
    return DualityCertificate(
        x_star, p_star, primal_value, dual.value, trace, box, extraction.steps
    )


def verify_certificate(
    f: TableFunction, psi: SeparableFunction, certificate: DualityCertificate
) -> bool:
    """
    Revalida un certificado sólo con evaluaciones y pertenencias

    Las dos pertenencias implican Psi°(p*) = <p*,x*> - Psi(x*) y
    f•(p*) = <p*,x*> - f(x*), de donde se obtiene el valor dual.
    """
    x, p = certificate.primal_point, certificate.dual_point
    f_value = f.evaluate(x)
    psi_value = psi.evaluate(x)
    if not (f_value.is_finite and psi_value.is_finite):
        return False
    if f_value - psi_value != certificate.primal_value:
        return False
    if not (in_argmax_of_table(f, p, x) and in_argmin_of_separable(psi, p, x)):
        return False
    dual = (ext(inner(p, x)) - psi_value) - (ext(inner(p, x)) - f_value)
    return dual == certificate.dual_value == certificate.primal_value


def weak_duality_audit(f, psi, p_samples: Iterable[Sequence[int]]) -> bool:
    """Psi°(p) - f•(p) <= min(f - Psi) en cada muestra"""
    try:
        minimum = ext(minimize_difference(f, psi)[1])
    except EmptyIntersection:
        minimum = PLUS_INF
    for p in p_samples:
        value = concave_conjugate(psi, p) - convex_conjugate(f, p)
        if value > minimum:
            logger.warning("Dualidad débil violada en p = %s: %s > %s", tuple(p), value, minimum)
            return False
    return True


def conjugate_class_certificate(
    g_table: TableFunction, psi: SeparableFunction, f: TableFunction
) -> DualityCertificate:
    """
    min { g - Psi } = max { Psi° - g• } para g = f• con f integralmente convexa

    g se conoce sólo en una caja dual finita; f es el insumo auxiliar que
    certifica la pertenencia a la clase. El lado derecho usa g• = f.

    Raises:
        BoxTooSmall: Si la caja no reproduce f como g• en dom f o los lados difieren
    """
    for p, value in f.items():
        restricted = integral_conjugate_table(g_table, p)
        if restricted != value:
            raise BoxTooSmall(f"g• restringida a la caja vale {restricted} != f({p}) = {value}")

    x_star, lhs = minimize_difference(g_table, psi)
    rhs, p_star = MINUS_INF, None
    for p, value in f.items():
        candidate = concave_conjugate(psi, p) - value
        if p_star is None or candidate > rhs:
            rhs, p_star = candidate, p

    # lado cruzado: min { f - Psi° } = -min { g - Psi }
    cross = min(ext(value) - concave_conjugate(psi, p) for p, value in f.items())
    trace = (
        TraceEntry("g• = f en dom f", True, f"{len(f)} puntos"),
        TraceEntry("min f - Psi° = -min g - Psi", cross == -ext(lhs), f"{cross} = {-lhs}"),
        TraceEntry("min = max", rhs == lhs, f"{lhs} = {rhs}"),
    )
    if rhs != lhs or cross != -ext(lhs):
        raise BoxTooSmall(f"Los lados difieren ({lhs} != {rhs}); la caja dual es insuficiente")
    return DualityCertificate(x_star, p_star, lhs, rhs.value, trace)


@dataclass(frozen=True)
class FinitenessCheck:
    """
    Attributes:
        holds: El máximo dual no se estabiliza en un valor finito con mínimo +inf
        primal_finite: dom f ∩ dom Psi != ∅
        maxima: max { Psi° - f• } sobre cajas de radio creciente
    """

    holds: bool
    primal_finite: bool
    maxima: Tuple[ExtendedInteger, ...] = ()


def finiteness_propagation_check(
    f: TableFunction, psi, radii: Sequence[int] = (1, 2, 3, 4)
) -> FinitenessCheck:
    """
    Un máximo dual finito obliga a un mínimo primal finito

    Con dominios disjuntos el máximo sobre cajas crecientes debe ser -inf
    o crecer estrictamente; un valor finito estable se marca como falla.
    """
    try:
        minimize_difference(f, psi)
        return FinitenessCheck(True, True)
    except EmptyIntersection:
        pass
    maxima = []
    for radius in radii:
        box = IntegralBox.cube(f.dimension, radius)
        maxima.append(
            max(concave_conjugate(psi, p) - convex_conjugate(f, p) for p in box.points())
        )
    holds = all(m.is_minus_infinity for m in maxima) or all(
        a < b for a, b in zip(maxima, maxima[1:])
    )
    if not holds:
        logger.warning("Máximo dual finito y estable con dominios disjuntos: %s", maxima)
    return FinitenessCheck(holds, False, tuple(maxima))
