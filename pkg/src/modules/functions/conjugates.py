"""
Conjugadas enteras

    f•(p) = max { <p,x> - f(x) : x ∈ Z^n }      (f convexa)
    g°(p) = min { <p,x> - g(x) : x ∈ Z^n }      (g cóncava)
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from src.core.errors import DimensionMismatch, InvalidFunction, NotIntegrallyConvex
from src.core.extended import MINUS_INF, PLUS_INF, ExtendedInteger, ext
from src.core.lattice import IntegralBox, LatticePoint, check_dimension, inner, sup_distance
from src.modules.functions.model import Orientation, TableFunction
from src.modules.functions.separable import Shape, SeparableFunction, UnivariatePiece

logger = logging.getLogger(__name__)


# Formas cerradas univariadas


def abs_form_conjugate(ell: int, alpha: int, k0: int) -> ExtendedInteger:
    """Conjugada de alpha|k - k0|: k0·ell si |ell| <= alpha, +inf si no"""
    if abs(ell) <= alpha:
        return ExtendedInteger.finite(k0 * ell)
    return PLUS_INF


def quad_form_conjugate(ell: int, beta: int, k0: int) -> ExtendedInteger:
    """
    Conjugada de beta(k - k0)^2

    k0·ell + m(ell - beta·m) con m = floor((ell + beta) / 2beta); el
    maximizador es k0 + m.
    """
    m = (ell + beta) // (2 * beta)
    return ExtendedInteger.finite(k0 * ell + m * (ell - beta * m))


def _unconstrained_maximizer(piece: UnivariatePiece, ell: int) -> ExtendedInteger:
    """Maximizador de ell·k - phi(k) en Z, o la dirección de crecimiento"""
    p = piece.params
    if piece.shape is Shape.ABS_FORM:
        if ell > p["alpha"]:
            return PLUS_INF
        if ell < -p["alpha"]:
            return MINUS_INF
        return ext(p["k0"])
    if piece.shape is Shape.QUAD_FORM:
        return ext(p["k0"] + (ell + p["beta"]) // (2 * p["beta"]))
    if piece.shape is Shape.LINEAR_FORM:
        if ell == p["c"]:
            return ext(0)
        return PLUS_INF if ell > p["c"] else MINUS_INF
    if ell > p["right"]:
        return PLUS_INF
    if ell < p["left"]:
        return MINUS_INF
    return ext(p["k0"])


def piece_convex_conjugate(piece: UnivariatePiece, ell: int) -> ExtendedInteger:
    """phi•(ell) para una pieza convexa"""
    if piece.orientation is not Orientation.CONVEX:
        raise InvalidFunction("Se esperaba una pieza convexa")
    if piece.shape is Shape.BREAKPOINTS:
        start = piece.lower.value
        return ext(max(ell * (start + i) - v for i, v in enumerate(piece.values)))
    p = piece.params
    if piece.is_unbounded_domain:
        if piece.shape is Shape.ABS_FORM:
            return abs_form_conjugate(ell, p["alpha"], p["k0"])
        if piece.shape is Shape.QUAD_FORM:
            return quad_form_conjugate(ell, p["beta"], p["k0"])
    # objetivo cóncavo en k: el maximizador restringido es el libre proyectado
    k = piece.clamp(_unconstrained_maximizer(piece, ell))
    if not k.is_finite:
        return PLUS_INF
    return ext(ell * k.value) - piece.evaluate(k.value)


def piece_concave_conjugate(piece: UnivariatePiece, ell: int) -> ExtendedInteger:
    """psi°(ell) = -(-psi)•(-ell) para una pieza cóncava"""
    if piece.orientation is not Orientation.CONCAVE:
        raise InvalidFunction("Se esperaba una pieza cóncava")
    return -piece_convex_conjugate(piece.negated(), -ell)


def brute_force_univariate_conjugate(
    piece: UnivariatePiece, ell: int, radius: int
) -> ExtendedInteger:
    """
    Conjugada por enumeración sobre [k0 - radius, k0 + radius] ∩ dominio

    Sólo es exacta si el objetivo es monótono fuera de la ventana.
    """
    center = piece.params.get("k0", 0)
    candidates = []
    for k in range(center - radius, center + radius + 1):
        value = piece.evaluate(k)
        if value.is_finite:
            candidates.append(ext(ell * k) - value)
    if not candidates:
        return piece.orientation.outside
    if piece.orientation is Orientation.CONVEX:
        return max(candidates)
    return min(candidates)


# Funciones separables


def convex_conjugate_separable(phi: SeparableFunction, p: Sequence[int]) -> ExtendedInteger:
    """Phi•(p) = sum_i phi_i•(p_i); +inf si algún término lo es"""
    if phi.orientation is not Orientation.CONVEX:
        raise InvalidFunction("Se esperaba una función separable convexa")
    check_dimension(phi.dimension, p, "vector dual")
    total = ext(0)
    for piece, ell in zip(phi.pieces, p):
        total = total + piece_convex_conjugate(piece, ell)
    return total


def concave_conjugate_separable(psi: SeparableFunction, p: Sequence[int]) -> ExtendedInteger:
    """Psi°(p) = sum_i psi_i°(p_i); -inf si algún mínimo univariado no es acotado"""
    if psi.orientation is not Orientation.CONCAVE:
        raise InvalidFunction("Se esperaba una función separable cóncava")
    check_dimension(psi.dimension, p, "vector dual")
    total = ext(0)
    for piece, ell in zip(psi.pieces, p):
        total = total + piece_concave_conjugate(piece, ell)
    return total


# Tablas


def integral_conjugate_table(f: TableFunction, p: Sequence[int]) -> int:
    """
    f•(p) = max { <p,x> - f(x) : x ∈ dom f }, siempre finito

    Raises:
        DimensionMismatch: Si p no tiene la dimensión de f
    """
    if len(p) != f.dimension:
        raise DimensionMismatch(f"Vector dual de dimensión {len(p)}")
    return max(inner(p, x) - v for x, v in f.items())


def _window_optimum(f: TableFunction, p: Sequence[int], points, maximize: bool):
    values = [inner(p, x) - f.entries[x] for x in points]
    if not values:
        return None
    return max(values) if maximize else min(values)


def _truncated_conjugate(f: TableFunction, p: Sequence[int], maximize: bool) -> ExtendedInteger:
    """
    Conjugada de una tabla que es ventana de una función en todo Z^n

    Si el óptimo sobre la ventana difiere del óptimo sobre la ventana
    reducida en un anillo, el objetivo crece sin cota y la conjugada es
    infinita.
    """
    full = _window_optimum(f, p, f.domain, maximize)
    shrunk = f.bounding_box().interior()
    inner_points = [x for x in f.domain if shrunk is not None and shrunk.contains(x)]
    inner_value = _window_optimum(f, p, inner_points, maximize)
    if inner_value is not None and inner_value != full:
        return PLUS_INF if maximize else MINUS_INF
    return ext(full)


def convex_conjugate(f, p: Sequence[int]) -> ExtendedInteger:
    """f•(p) para tablas (truncadas o no) y funciones separables convexas"""
    if isinstance(f, SeparableFunction):
        return convex_conjugate_separable(f, p)
    if f.orientation is not Orientation.CONVEX:
        raise InvalidFunction("Se esperaba una tabla convexa")
    check_dimension(f.dimension, p, "vector dual")
    if f.truncated:
        return _truncated_conjugate(f, p, maximize=True)
    return ext(integral_conjugate_table(f, p))


def concave_conjugate(g, p: Sequence[int]) -> ExtendedInteger:
    """g°(p) para tablas cóncavas (truncadas o no) y funciones separables cóncavas"""
    if isinstance(g, SeparableFunction):
        return concave_conjugate_separable(g, p)
    if g.orientation is not Orientation.CONCAVE:
        raise InvalidFunction("Se esperaba una tabla cóncava")
    check_dimension(g.dimension, p, "vector dual")
    if g.truncated:
        return _truncated_conjugate(g, p, maximize=False)
    return ext(min(inner(p, x) - v for x, v in g.items()))


def conjugate_table_on_box(f: TableFunction, box: IntegralBox) -> TableFunction:
    """Tabla de f• restringida a los puntos enteros de una caja acotada"""
    return TableFunction(
        f.dimension, {p: integral_conjugate_table(f, p) for p in box.points()}
    )


# Biconjugación


@dataclass(frozen=True)
class BiconjugateResult:
    """
    Attributes:
        holds: f•• = f en todo dom f
        violating_point: Primer punto (orden lexicográfico) con f••(x) < f(x)
        radius: Radio de la caja de pendientes enumerada
    """

    holds: bool
    violating_point: Optional[LatticePoint]
    radius: int


def slope_radius(f: TableFunction) -> int:
    """
    Radio de la caja de pendientes candidatas

    El máximo entre la diferencia de valores en dom f y 2^(n-1)·Delta,
    con Delta la mayor diferencia entre puntos adyacentes; al menos 1.
    """
    values = list(f.entries.values())
    spread = max(values) - min(values)
    domain = f.domain
    delta = 0
    for i, x in enumerate(domain):
        for y in domain[i + 1:]:
            if sup_distance(x, y) == 1:
                delta = max(delta, abs(f.entries[x] - f.entries[y]))
    return max(1, spread, 2 ** (f.dimension - 1) * delta)


def biconjugate_check(f: TableFunction, strict: bool = False) -> BiconjugateResult:
    """
    Compara f•• con f en dom f

    f•(p) se calcula una vez por p de la caja [-R, R]^n y se usa para
    actualizar f••(x) en todos los x.

    Raises:
        NotIntegrallyConvex: En modo estricto, si f•• != f
    """
    radius = slope_radius(f)
    n = f.dimension
    best = {x: None for x in f.domain}
    for p in IntegralBox.cube(n, radius).points():
        conj = integral_conjugate_table(f, p)
        for x in best:
            candidate = inner(p, x) - conj
            if best[x] is None or candidate > best[x]:
                best[x] = candidate
    violating = next((x for x in f.domain if best[x] != f.entries[x]), None)
    logger.debug("Biconjugada con radio %d: violación en %s", radius, violating)
    if strict and violating is not None:
        raise NotIntegrallyConvex(f"f••({violating}) != f({violating})")
    return BiconjugateResult(violating is None, violating, radius)
