"""
Sistema reducido por Fourier-Motzkin para A p <= b con a_ij ∈ {-1,0,+1}

Los índices anidados se filtran nivel a nivel:

    Î_0^0 = I
    Î_ℓ^+ = { i ∈ Î_{ℓ-1}^0 : a_iℓ = +1 }
    Î_ℓ^- = { i ∈ Î_{ℓ-1}^0 : a_iℓ = -1 }
    Î_ℓ^0 = { i ∈ Î_{ℓ-1}^0 : a_iℓ =  0 }

y el nivel ℓ acota p_ℓ en función de p_{ℓ+1}..p_n.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from src.core.errors import DimensionMismatch
from src.core.extended import MINUS_INF, PLUS_INF, ExtendedInteger, ext
from src.core.lattice import IntegralBox, inner
from src.modules.subdifferential.iq import Interval
from src.modules.subdifferential.system import InequalitySystem, format_linear_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundTerm:
    """Cota afín constant + sum_{j>ℓ} c_j p_j"""

    coefficients: Tuple[int, ...]
    constant: int

    def value(self, tail: Sequence) -> Fraction:
        return self.constant + inner(self.coefficients, tail)

    def describe(self, start: int) -> str:
        if not any(self.coefficients):
            return str(self.constant)
        text = format_linear_form(self.coefficients, start=start)
        if self.constant:
            sign = "-" if self.constant < 0 else "+"
            text += f" {sign} {abs(self.constant)}"
        return text


@dataclass(frozen=True)
class LevelBounds:
    """
    max{lower_box, max lower_terms} <= p_ℓ <= min{upper_box, min upper_terms}

    Attributes:
        level: ℓ (1-based)
        lower_terms: Cotas de las filas de Î_ℓ^-
        upper_terms: Cotas de las filas de Î_ℓ^+
        lower_box: alpha_ℓ (-inf sin caja)
        upper_box: beta_ℓ (+inf sin caja)
    """

    level: int
    lower_terms: Tuple[BoundTerm, ...]
    upper_terms: Tuple[BoundTerm, ...]
    lower_box: ExtendedInteger = MINUS_INF
    upper_box: ExtendedInteger = PLUS_INF

    def interval(self, tail: Sequence) -> Interval:
        tail = tuple(Fraction(v) for v in tail)
        lower = max([self.lower_box] + [ext(t.value(tail)) for t in self.lower_terms])
        upper = min([self.upper_box] + [ext(t.value(tail)) for t in self.upper_terms])
        return Interval(lower, upper)

    def __str__(self) -> str:
        start = self.level + 1
        lower = [t.describe(start) for t in self.lower_terms]
        upper = [t.describe(start) for t in self.upper_terms]
        if self.lower_box.is_finite:
            lower.append(str(self.lower_box))
        if self.upper_box.is_finite:
            upper.append(str(self.upper_box))
        left = f"max{{{', '.join(lower)}}}" if lower else "-inf"
        right = f"min{{{', '.join(upper)}}}" if upper else "+inf"
        return f"{left} <= p{self.level} <= {right}"


def _reduced_levels(
    system: InequalitySystem, box: Optional[IntegralBox]
) -> Tuple[LevelBounds, ...]:
    n = system.dimension
    remaining = list(system.rows)
    levels = []
    for level in range(1, n + 1):
        lower, upper, zero = [], [], []
        for row in remaining:
            a = row.coefficients
            tail = a[level:]
            if a[level - 1] == 1:
                upper.append(BoundTerm(tuple(-c for c in tail), row.rhs))
            elif a[level - 1] == -1:
                lower.append(BoundTerm(tail, -row.rhs))
            else:
                zero.append(row)
        remaining = zero
        bounds = LevelBounds(level, tuple(lower), tuple(upper))
        if box is not None:
            bounds = LevelBounds(
                level,
                bounds.lower_terms,
                bounds.upper_terms,
                box.lower[level - 1],
                box.upper[level - 1],
            )
        levels.append(bounds)
    return tuple(levels)


def fm_reduced_system(system: InequalitySystem) -> Tuple[LevelBounds, ...]:
    """
    Cotas de p_1, ..., p_n por la filtración de índices, sin caja

    Para f integralmente convexa las cotas de los niveles ℓ..n describen
    la proyección de ∂f(x) sobre (p_ℓ, ..., p_n).
    """
    return _reduced_levels(system, None)


def naive_box_intervals(
    system: InequalitySystem, box: Optional[IntegralBox] = None
) -> Tuple[LevelBounds, ...]:
    """
    Las cotas del sistema reducido combinadas con alpha_ℓ <= p_ℓ <= beta_ℓ

    Describe P ∩ B nivel a nivel pero no su proyección: la cota de p_ℓ
    puede ser más holgada que la proyección real.
    """
    return _reduced_levels(system, box or system.box)


def reduced_slice(levels: Sequence[LevelBounds], level: int, tail: Sequence) -> Interval:
    """
    Intervalo de p_ℓ dado p_{ℓ+1}..p_n; vacío si la cola viola algún nivel posterior
    """
    n = len(levels)
    if len(tail) != n - level:
        raise DimensionMismatch(f"Cola de largo {len(tail)} para el nivel {level}")
    tail = tuple(Fraction(v) for v in tail)
    for k in range(level + 1, n + 1):
        offset = k - level - 1
        if not levels[k - 1].interval(tail[offset + 1:]).contains(tail[offset]):
            return Interval.empty()
    return levels[level - 1].interval(tail)
