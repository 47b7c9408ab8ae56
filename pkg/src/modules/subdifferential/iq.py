"""
Sistemas IQ(ℓ): proyección directa de ∂f(x) ∩ B sobre (p_ℓ, ..., p_n)

Cada fila a·p <= b del sistema original se convierte en

    sum_{j>=ℓ} a_j p_j <= b - ( sum_{j<ℓ, a_j=+1} alpha_j - sum_{j<ℓ, a_j=-1} beta_j )

y se agregan las filas de caja p_j <= beta_j, -p_j <= -alpha_j para j >= ℓ.
Una constante plegada igual a -inf deja la fila trivialmente verdadera.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from src.core.errors import DimensionMismatch
from src.core.extended import MINUS_INF, PLUS_INF, ExtendedInteger, ext
from src.core.lattice import IntegralBox, inner
from src.modules.subdifferential.system import InequalitySystem, format_linear_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Interval:
    """
    Intervalo cerrado con extremos posiblemente infinitos

    Un intervalo con lower > upper es vacío; se reporta como valor.
    """

    lower: ExtendedInteger
    upper: ExtendedInteger

    @classmethod
    def unbounded(cls) -> "Interval":
        return cls(MINUS_INF, PLUS_INF)

    @classmethod
    def empty(cls) -> "Interval":
        return cls(PLUS_INF, MINUS_INF)

    @property
    def is_empty(self) -> bool:
        return self.lower > self.upper

    def contains(self, value) -> bool:
        return self.lower <= ext(value) <= self.upper

    def __str__(self) -> str:
        if self.is_empty:
            return "empty"
        return f"[{self.lower}, {self.upper}]"


class RowKind(str, Enum):
    """Clasificación de una fila de IQ(ℓ) según su coeficiente en p_ℓ"""

    PLUS = "plus"
    MINUS = "minus"
    ZERO = "zero"
    BOX_UPPER = "box_upper"
    BOX_LOWER = "box_lower"


@dataclass(frozen=True)
class IQRow:
    """
    Fila sum_{j>=ℓ} a_j p_j <= rhs de IQ(ℓ)

    Attributes:
        kind: Clasificación de la fila
        coefficients: Coeficientes sobre p_ℓ..p_n
        rhs: Lado derecho con la constante plegada; +inf si es trivial
        source: Índice de la fila original, o variable j (1-based) de caja
    """

    kind: RowKind
    coefficients: Tuple[int, ...]
    rhs: ExtendedInteger
    source: int

    @property
    def trivial(self) -> bool:
        return self.rhs.is_plus_infinity

    def satisfied_by(self, values: Sequence) -> bool:
        return self.trivial or ext(inner(self.coefficients, values)) <= self.rhs

    def describe(self, level: int) -> str:
        return f"{format_linear_form(self.coefficients, start=level)} <= {self.rhs}"


@dataclass(frozen=True)
class IQSystem:
    """
    El sistema IQ(ℓ) sobre las variables p_ℓ..p_n

    Las filas trivialmente verdaderas se conservan marcadas, de modo que
    el total de filas es |I| + 2(n - ℓ + 1).

    Attributes:
        level: ℓ (1-based)
        dimension: n
        rows: Filas del sistema original seguidas de las filas de caja
        box: Caja B usada para plegar las constantes
    """

    level: int
    dimension: int
    rows: Tuple[IQRow, ...]
    box: IntegralBox

    def _of_kind(self, kind: RowKind) -> Tuple[IQRow, ...]:
        return tuple(r for r in self.rows if r.kind is kind)

    @property
    def plus_rows(self) -> Tuple[IQRow, ...]:
        return self._of_kind(RowKind.PLUS)

    @property
    def minus_rows(self) -> Tuple[IQRow, ...]:
        return self._of_kind(RowKind.MINUS)

    @property
    def zero_rows(self) -> Tuple[IQRow, ...]:
        return self._of_kind(RowKind.ZERO)

    @property
    def box_rows(self) -> Tuple[IQRow, ...]:
        return tuple(
            r for r in self.rows if r.kind in (RowKind.BOX_UPPER, RowKind.BOX_LOWER)
        )

    @property
    def active_rows(self) -> Tuple[IQRow, ...]:
        return tuple(r for r in self.rows if not r.trivial)

    @property
    def tail_length(self) -> int:
        return self.dimension - self.level

    def _check_tail(self, tail: Sequence) -> Tuple[Fraction, ...]:
        if len(tail) != self.tail_length:
            raise DimensionMismatch(
                f"Cola de largo {len(tail)}, se esperaban {self.tail_length} valores"
            )
        return tuple(Fraction(v) for v in tail)

    def projection_interval(self, tail: Sequence) -> Interval:
        """
        Intervalo exacto para p_ℓ dados p_{ℓ+1}..p_n

            max{alpha_ℓ, max_minus (sum_{j>ℓ} a_kj p_j - rhs_k)} <= p_ℓ
            p_ℓ <= min{beta_ℓ, min_plus (rhs_i - sum_{j>ℓ} a_ij p_j)}
        """
        tail = self._check_tail(tail)
        lower = self.box.lower[self.level - 1]
        upper = self.box.upper[self.level - 1]
        for row in self.minus_rows:
            if not row.trivial:
                lower = max(lower, ext(inner(row.coefficients[1:], tail)) - row.rhs)
        for row in self.plus_rows:
            if not row.trivial:
                upper = min(upper, row.rhs - inner(row.coefficients[1:], tail))
        return Interval(lower, upper)

    def slice(self, tail: Sequence) -> Interval:
        """
        Como projection_interval, pero vacío si la cola viola alguna fila
        de IQ(ℓ) que no involucra a p_ℓ
        """
        tail = self._check_tail(tail)
        values = (Fraction(0),) + tail
        for row in self.rows:
            if row.coefficients[0] == 0 and not row.satisfied_by(values):
                return Interval.empty()
        return self.projection_interval(tail)

    def contains(self, point: Sequence) -> bool:
        """(p_ℓ, ..., p_n) satisface todas las filas de IQ(ℓ)"""
        if len(point) != self.dimension - self.level + 1:
            raise DimensionMismatch("Punto de largo incorrecto para IQ(ℓ)")
        values = tuple(Fraction(v) for v in point)
        return all(row.satisfied_by(values) for row in self.rows)


def _folded_constant(coefficients: Sequence[int], box: IntegralBox, level: int):
    constant = ext(0)
    for j in range(level - 1):
        if coefficients[j] == 1:
            constant = constant + box.lower[j]
        elif coefficients[j] == -1:
            constant = constant - box.upper[j]
    return constant


def build_iq(
    system: InequalitySystem, box: Optional[IntegralBox] = None, level: int = 1
) -> IQSystem:
    """
    Construye IQ(ℓ) a partir de A p <= b y la caja B

    Args:
        system: Sistema del subdiferencial
        box: Caja B; por defecto la del sistema
        level: ℓ entre 1 y n
    """
    n = system.dimension
    if not 1 <= level <= n:
        raise ValueError(f"Nivel {level} fuera de 1..{n}")
    box = box or system.box
    rows = []
    for index, row in enumerate(system.rows):
        a = row.coefficients
        constant = _folded_constant(a, box, level)
        rhs = PLUS_INF if constant.is_minus_infinity else ext(row.rhs) - constant
        kind = {1: RowKind.PLUS, -1: RowKind.MINUS, 0: RowKind.ZERO}[a[level - 1]]
        rows.append(IQRow(kind, tuple(a[level - 1:]), rhs, index))
    for j in range(level, n + 1):
        unit = tuple(int(k == j) for k in range(level, n + 1))
        rows.append(IQRow(RowKind.BOX_UPPER, unit, box.upper[j - 1], j))
        lower = box.lower[j - 1]
        rhs = PLUS_INF if lower.is_minus_infinity else -lower
        rows.append(IQRow(RowKind.BOX_LOWER, tuple(-u for u in unit), rhs, j))
    iq = IQSystem(level, n, tuple(rows), box)
    dropped = len(rows) - len(iq.active_rows)
    if dropped:
        logger.debug("IQ(%d): %d filas trivialmente verdaderas", level, dropped)
    return iq
