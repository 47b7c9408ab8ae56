"""
Cadena de brechas para pares sin convexidad integral

    min{f - g} >= min{f̄ - ḡ} >= max_{p ∈ R^n}{g° - f•} >= max_{p ∈ Z^n}{g° - f•}

Los dos valores continuos se obtienen por programación lineal exacta y
sólo están disponibles en dimensión <= 2.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Tuple

from src.core.errors import EmptyIntersection, UnsupportedDimension
from src.core.extended import MINUS_INF, PLUS_INF, ExtendedInteger, ext
from src.core.lattice import IntegralBox
from src.modules.fenchel.duality import minimize_difference
from src.modules.functions.conjugates import concave_conjugate, convex_conjugate
from src.modules.functions.model import Orientation, TableFunction, tabulate
from src.modules.functions.separable import SeparableFunction
from src.utils.lp import LPStatus, solve_linear_program

logger = logging.getLogger(__name__)

CONTINUOUS_MAX_DIMENSION = 2


@dataclass(frozen=True)
class GapReport:
    """
    Attributes:
        discrete_min: min { f - g } sobre Z^n
        continuous_min: min { f̄ - ḡ } sobre R^n
        real_dual_max: max { g° - f• } sobre p real
        integer_dual_max: max { g° - f• } sobre p entero en la caja dual
        dual_box: Caja dual enumerada
    """

    discrete_min: ExtendedInteger
    continuous_min: ExtendedInteger
    real_dual_max: ExtendedInteger
    integer_dual_max: ExtendedInteger
    dual_box: IntegralBox

    @property
    def chain(self) -> Tuple[ExtendedInteger, ...]:
        return (
            self.discrete_min,
            self.continuous_min,
            self.real_dual_max,
            self.integer_dual_max,
        )

    @property
    def has_gap(self) -> bool:
        return len(set(self.chain)) > 1


def _as_concave_table(g, f: TableFunction) -> TableFunction:
    if isinstance(g, SeparableFunction):
        return tabulate(g, f.bounding_box().points(), Orientation.CONCAVE)
    return g


def _check_dimension(f: TableFunction) -> None:
    if f.dimension > CONTINUOUS_MAX_DIMENSION:
        raise UnsupportedDimension(
            f"Los valores continuos requieren n <= {CONTINUOUS_MAX_DIMENSION}, n = {f.dimension}"
        )


def continuous_minimum(f: TableFunction, g) -> ExtendedInteger:
    """
    min { f̄(z) - ḡ(z) : z ∈ R^n } por un programa lineal sobre los pesos

        min sum λ_x f(x) - sum μ_y g(y)
        s.a. sum λ = 1, sum μ = 1, sum λ_x x - sum μ_y y = 0

    Raises:
        UnsupportedDimension: Si n > 2
    """
    _check_dimension(f)
    g = _as_concave_table(g, f)
    f_points, g_points = list(f.domain), list(g.domain)
    width = len(f_points) + len(g_points)
    cost = [f.entries[x] for x in f_points] + [-g.entries[y] for y in g_points]
    A_eq = [
        [1] * len(f_points) + [0] * len(g_points),
        [0] * len(f_points) + [1] * len(g_points),
    ]
    for i in range(f.dimension):
        A_eq.append([x[i] for x in f_points] + [-y[i] for y in g_points])
    b_eq = [1, 1] + [0] * f.dimension
    result = solve_linear_program(cost, A_eq, b_eq)
    if result.status is LPStatus.INFEASIBLE:
        return PLUS_INF
    logger.debug("min f̄ - ḡ = %s sobre %d pesos", result.value, width)
    return ext(result.value)


def continuous_dual_maximum(f: TableFunction, g) -> ExtendedInteger:
    """
    max { g°(p) - f•(p) : p ∈ R^n } con variables libres p, s, t

        max t - s
        s.a. <p,x> - s <= f(x)    (x ∈ dom f)
             t - <p,y> <= -g(y)   (y ∈ dom g)

    Raises:
        UnsupportedDimension: Si n > 2
    """
    _check_dimension(f)
    g = _as_concave_table(g, f)
    n = f.dimension
    A_ub, b_ub = [], []
    for x, value in f.items():
        A_ub.append(list(x) + [-1, 0])
        b_ub.append(value)
    for y, value in g.items():
        A_ub.append([-c for c in y] + [0, 1])
        b_ub.append(-value)
    cost = [0] * n + [-1, 1]
    result = solve_linear_program(cost, A_ub=A_ub, b_ub=b_ub, free=range(n + 2), maximize=True)
    if result.status is LPStatus.UNBOUNDED:
        return PLUS_INF
    return ext(result.value)


def integer_dual_maximum(f: TableFunction, g, dual_box: IntegralBox) -> ExtendedInteger:
    """max { g°(p) - f•(p) } por enumeración de la caja dual"""
    best = MINUS_INF
    for p in dual_box.points():
        best = max(best, concave_conjugate(g, p) - convex_conjugate(f, p))
    return best


def counterexample_gap_report(f: TableFunction, g, dual_box: IntegralBox) -> GapReport:
    """
    Los cuatro valores de la cadena de brechas

    Raises:
        UnsupportedDimension: Si n > 2
    """
    try:
        discrete = ext(minimize_difference(f, g)[1])
    except EmptyIntersection:
        discrete = PLUS_INF
    report = GapReport(
        discrete,
        continuous_minimum(f, g),
        continuous_dual_maximum(f, g),
        integer_dual_maximum(f, g, dual_box),
        dual_box,
    )
    logger.info("Cadena de brechas: %s", ", ".join(str(v) for v in report.chain))
    return report
