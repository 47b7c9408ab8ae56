"""
Simplex primal de dos fases sobre racionales exactos

Resuelve
    min  c·x
    s.a. A_eq x = b_eq,  A_ub x <= b_ub,  x_j >= 0 salvo variables libres

con la regla de Bland para la variable entrante y la saliente, lo que
garantiza terminación sin ciclos en aritmética exacta.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from src.config.settings import settings
from src.core.errors import InternalInfeasible

logger = logging.getLogger(__name__)


class LPStatus(str, Enum):
    """Resultado de un programa lineal"""

    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    """
    Attributes:
        status: Estado final
        value: Valor óptimo (sólo si status es OPTIMAL)
        solution: Punto óptimo en las variables originales
    """

    status: LPStatus
    value: Optional[Fraction] = None
    solution: Optional[Tuple[Fraction, ...]] = None

    @property
    def is_optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


class Tableau:
    """Tableau denso en forma canónica respecto de una base"""

    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], basis: List[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def pivot(self, r: int, c: int) -> None:
        self.pivots += 1
        if self.pivots > settings.LP_MAX_PIVOTS:
            raise InternalInfeasible("Se excedió el límite de pivotes del simplex")
        piv = self.rows[r][c]
        row = [v / piv for v in self.rows[r]]
        rhs = self.rhs[r] / piv
        self.rows[r], self.rhs[r] = row, rhs
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            factor = other[c]
            if factor:
                self.rows[i] = [a - factor * b for a, b in zip(other, row)]
                self.rhs[i] -= factor * rhs
        self.basis[r] = c

    def objective(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * v for b, v in zip(self.basis, self.rhs)), Fraction(0))

    def reduced_cost(self, cost: Sequence[Fraction], j: int) -> Fraction:
        return cost[j] - sum(
            (cost[b] * row[j] for b, row in zip(self.basis, self.rows)), Fraction(0)
        )

    def minimize(self, cost: Sequence[Fraction], allowed: Iterable[int]) -> LPStatus:
        """Itera hasta optimalidad o hasta detectar un rayo de descenso"""
        allowed = sorted(allowed)
        while True:
            entering = None
            for j in allowed:
                if j in self.basis:
                    continue
                if self.reduced_cost(cost, j) < 0:
                    entering = j
                    break
            if entering is None:
                return LPStatus.OPTIMAL

            leaving = None
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leaving])
                    ):
                        best, leaving = ratio, i
            if leaving is None:
                return LPStatus.UNBOUNDED
            self.pivot(leaving, entering)


def solve_linear_program(
    c: Sequence,
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    free: Iterable[int] = (),
    maximize: bool = False,
) -> LPResult:
    """
    Resuelve un programa lineal en aritmética exacta

    Args:
        c: Costos de las n variables
        A_eq, b_eq: Restricciones de igualdad
        A_ub, b_ub: Restricciones de desigualdad (<=)
        free: Índices de variables sin restricción de signo
        maximize: Maximizar en vez de minimizar

    Returns:
        LPResult: Estado, valor y solución
    """
    n = len(c)
    free = set(free)
    sign = -1 if maximize else 1

    # columna(s) de cada variable original: (positiva, negativa o None)
    columns: List[Tuple[int, Optional[int]]] = []
    width = 0
    for j in range(n):
        if j in free:
            columns.append((width, width + 1))
            width += 2
        else:
            columns.append((width, None))
            width += 1
    structural = width
    slack_start = width
    width += len(A_ub)

    def expand(coeffs: Sequence) -> List[Fraction]:
        row = [Fraction(0)] * structural
        for j, a in enumerate(coeffs):
            pos, neg = columns[j]
            row[pos] = Fraction(a)
            if neg is not None:
                row[neg] = -Fraction(a)
        return row

    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for coeffs, b in zip(A_eq, b_eq):
        rows.append(expand(coeffs) + [Fraction(0)] * len(A_ub))
        rhs.append(Fraction(b))
    for k, (coeffs, b) in enumerate(zip(A_ub, b_ub)):
        slack = [Fraction(0)] * len(A_ub)
        slack[k] = Fraction(1)
        rows.append(expand(coeffs) + slack)
        rhs.append(Fraction(b))

    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]

    m = len(rows)
    artificial_start = width
    for i in range(m):
        rows[i] = rows[i] + [Fraction(int(k == i)) for k in range(m)]
    total = width + m

    tableau = Tableau(rows, rhs, list(range(artificial_start, total)))
    phase_one = [Fraction(0)] * width + [Fraction(1)] * m
    tableau.minimize(phase_one, range(total))
    if tableau.objective(phase_one) > 0:
        logger.debug("Programa lineal infactible tras fase 1")
        return LPResult(LPStatus.INFEASIBLE)

    # sacar artificiales de la base o eliminar filas redundantes
    redundant = []
    for i, b in enumerate(tableau.basis):
        if b < artificial_start:
            continue
        column = next(
            (j for j in range(artificial_start) if tableau.rows[i][j] != 0), None
        )
        if column is None:
            redundant.append(i)
        else:
            tableau.pivot(i, column)
    for i in reversed(redundant):
        del tableau.rows[i]
        del tableau.rhs[i]
        del tableau.basis[i]

    cost = [Fraction(0)] * total
    for j, coeff in enumerate(c):
        pos, neg = columns[j]
        cost[pos] = sign * Fraction(coeff)
        if neg is not None:
            cost[neg] = -sign * Fraction(coeff)

    status = tableau.minimize(cost, range(artificial_start))
    logger.debug("Simplex terminó con %s tras %d pivotes", status.value, tableau.pivots)
    if status is LPStatus.UNBOUNDED:
        return LPResult(LPStatus.UNBOUNDED)

    values = [Fraction(0)] * total
    for b, v in zip(tableau.basis, tableau.rhs):
        values[b] = v
    solution = tuple(
        values[pos] - (values[neg] if neg is not None else 0) for pos, neg in columns
    )
    return LPResult(LPStatus.OPTIMAL, sign * tableau.objective(cost), solution)


def is_feasible(
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    n: Optional[int] = None,
    free: Iterable[int] = (),
) -> bool:
    """Factibilidad de un sistema lineal (objetivo nulo)"""
    if n is None:
        n = len(A_eq[0]) if A_eq else len(A_ub[0])
    result = solve_linear_program([0] * n, A_eq, b_eq, A_ub, b_ub, free)
    return result.is_optimal
