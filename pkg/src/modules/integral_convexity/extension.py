"""
Vecindario integral y extensión convexa local
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from src.core.extended import PLUS_INF, ExtendedInteger, ext
from src.core.lattice import LatticePoint, RationalVector, check_dimension, rational_vector
from src.modules.functions.model import TableFunction, tabulate
from src.modules.functions.separable import SeparableFunction
from src.utils.lp import is_feasible, solve_linear_program

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NeighborhoodSystem:
    """
    N(z) = { y ∈ Z^n : floor(z_i) <= y_i <= ceil(z_i) }

    Attributes:
        center: El punto z
        members: Puntos enteros de la celda, en orden lexicográfico
    """

    center: RationalVector
    members: Tuple[LatticePoint, ...]


def integral_neighborhood(z: Sequence) -> NeighborhoodSystem:
    """Vecindario integral de un punto racional"""
    center = rational_vector(z)
    ranges = [sorted({math.floor(c), math.ceil(c)}) for c in center]
    return NeighborhoodSystem(center, tuple(itertools.product(*ranges)))


def _convex_combination_value(
    points: Sequence[LatticePoint], values: Sequence[int], z: RationalVector
) -> ExtendedInteger:
    """min sum λ_y f(y) con sum λ_y y = z, sum λ_y = 1, λ >= 0; +inf si es infactible"""
    if not points:
        return PLUS_INF
    n = len(z)
    A_eq = [[y[i] for y in points] for i in range(n)] + [[1] * len(points)]
    b_eq = list(z) + [1]
    result = solve_linear_program(values, A_eq, b_eq)
    if not result.is_optimal:
        return PLUS_INF
    return ext(result.value)


def local_extension(f, z: Sequence) -> ExtendedInteger:
    """
    f~(z): el mejor valor de combinación convexa sobre N(z) ∩ dom f

    Una función separable se tabula primero sobre la celda de z.

    Returns:
        ExtendedInteger: Valor racional exacto o +inf si z no está en la
        envolvente local
    """
    neighborhood = integral_neighborhood(z)
    check_dimension(f.dimension, neighborhood.center, "punto")
    if isinstance(f, SeparableFunction):
        f = tabulate(f, neighborhood.members)
    points = [y for y in neighborhood.members if y in f]
    return _convex_combination_value(
        points, [f.entries[y] for y in points], neighborhood.center
    )


def convex_envelope(f: TableFunction, z: Sequence) -> ExtendedInteger:
    """f̄(z): combinación convexa sobre todo dom f"""
    center = rational_vector(z)
    check_dimension(f.dimension, center, "punto")
    points = list(f.domain)
    return _convex_combination_value(points, [f.entries[y] for y in points], center)


def in_convex_hull(points: Iterable[Sequence[int]], z: Sequence[Fraction]) -> bool:
    """z ∈ conv(points) por factibilidad exacta"""
    points = list(points)
    if not points:
        return False
    n = len(z)
    A_eq = [[y[i] for y in points] for i in range(n)] + [[1] * len(points)]
    return is_feasible(A_eq, list(z) + [1], n=len(points))


def in_local_hull(points: Iterable[Sequence[int]], z: Sequence[Fraction]) -> bool:
    """z ∈ conv(S ∩ N(z))"""
    members = set(integral_neighborhood(z).members)
    return in_convex_hull([p for p in points if tuple(p) in members], z)
