"""
Enumeración exhaustiva de vértices de {A p <= b} ∩ B
"""
import itertools
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from src.core.errors import UnboundedRegion
from src.core.lattice import IntegralBox, RationalVector, inner
from src.modules.subdifferential.system import InequalitySystem
from src.utils.linalg import solve_square_system
from src.utils.lp import LPStatus, solve_linear_program

logger = logging.getLogger(__name__)


def _rows_with_box(system: InequalitySystem, box: IntegralBox) -> List[Tuple[Tuple[int, ...], int]]:
    n = system.dimension
    rows = [(row.coefficients, row.rhs) for row in system.rows]
    for j in range(n):
        unit = tuple(int(k == j) for k in range(n))
        if box.upper[j].is_finite:
            rows.append((unit, box.upper[j].value))
        if box.lower[j].is_finite:
            rows.append((tuple(-u for u in unit), -box.lower[j].value))
    return rows


def _check_bounded(rows, n: int) -> bool:
    """
    Acotación coordenada a coordenada

    Returns:
        False si la región es vacía

    Raises:
        UnboundedRegion: Si alguna coordenada no es acotada
    """
    A_ub = [list(a) for a, _ in rows]
    b_ub = [b for _, b in rows]
    for j in range(n):
        for maximize in (True, False):
            cost = [int(k == j) for k in range(n)]
            result = solve_linear_program(cost, A_ub=A_ub, b_ub=b_ub, free=range(n), maximize=maximize)
            if result.status is LPStatus.INFEASIBLE:
                return False
            if result.status is LPStatus.UNBOUNDED:
                raise UnboundedRegion(f"La coordenada p{j + 1} no es acotada")
    return True


def enumerate_vertices(
    system: InequalitySystem, box: Optional[IntegralBox] = None
) -> Tuple[RationalVector, ...]:
    """
    Todos los vértices, en orden lexicográfico

    Cada subconjunto de n filas con matriz no singular define un candidato
    que se conserva si satisface todas las filas.

    Raises:
        UnboundedRegion: Si la región no es acotada
    """
    n = system.dimension
    rows = _rows_with_box(system, box or system.box)
    if not rows:
        raise UnboundedRegion("Sistema sin filas ni caja finita")
    if not _check_bounded(rows, n):
        return ()
    vertices = set()
    for subset in itertools.combinations(rows, n):
        solution = solve_square_system([a for a, _ in subset], [b for _, b in subset])
        if solution is None or solution in vertices:
            continue
        if all(inner(a, solution) <= b for a, b in rows):
            vertices.add(solution)
    logger.debug("%d vértices sobre %d filas", len(vertices), len(rows))
    return tuple(sorted(vertices))


def is_integral_vertex(vertex: RationalVector) -> bool:
    return all(Fraction(c).denominator == 1 for c in vertex)
