"""
Sistema de desigualdades del subdiferencial en un punto

    ∂f(x) = { p ∈ R^n : <p, d> <= f(x + d) - f(x),  d ∈ {-1,0,+1}^n \\ {0} }

válido para f integralmente convexa.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from src.core.errors import DimensionMismatch, InvalidFunction, PointOutsideDomain
from src.core.lattice import (
    IntegralBox,
    LatticePoint,
    add_points,
    check_dimension,
    directions,
    inner,
    lattice_point,
)
from src.modules.functions.model import TableFunction

logger = logging.getLogger(__name__)


def format_linear_form(coefficients: Sequence, start: int = 1) -> str:
    """Texto de sum a_j p_j, con índices desde `start`"""
    terms = []
    for j, a in enumerate(coefficients, start=start):
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        magnitude = "" if abs(a) == 1 else f"{abs(a)}·"
        terms.append(f"{sign} {magnitude}p{j}")
    if not terms:
        return "0"
    text = " ".join(terms)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class Inequality:
    """
    Una fila a·p <= b con a ∈ {-1,0,+1}^n

    Attributes:
        coefficients: Vector a
        rhs: Lado derecho entero b
    """

    coefficients: Tuple[int, ...]
    rhs: int

    def __post_init__(self):
        if any(a not in (-1, 0, 1) for a in self.coefficients):
            raise InvalidFunction(f"Coeficientes fuera de {{-1,0,1}}: {self.coefficients}")

    def lhs(self, p: Sequence) -> Fraction:
        return Fraction(inner(self.coefficients, p))

    def satisfied_by(self, p: Sequence) -> bool:
        return inner(self.coefficients, p) <= self.rhs

    def __str__(self) -> str:
        return f"{format_linear_form(self.coefficients)} <= {self.rhs}"


@dataclass(frozen=True)
class InequalitySystem:
    """
    Sistema A p <= b junto con una caja integral opcional

    Attributes:
        dimension: Número de variables n
        rows: Filas en el orden de sus desplazamientos d
        box: Caja [alpha, beta]; la trivial si no se indica
    """

    dimension: int
    rows: Tuple[Inequality, ...] = ()
    box: Optional[IntegralBox] = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for row in self.rows:
            check_dimension(self.dimension, row.coefficients, "fila")
        if self.box is None:
            object.__setattr__(self, "box", IntegralBox.trivial(self.dimension))
        elif self.box.dimension != self.dimension:
            raise DimensionMismatch("La caja no tiene la dimensión del sistema")

    def with_box(self, box: IntegralBox) -> "InequalitySystem":
        return InequalitySystem(self.dimension, self.rows, box)

    def without_box(self) -> "InequalitySystem":
        return InequalitySystem(self.dimension, self.rows)

    def satisfied_by(self, p: Sequence, use_box: bool = True) -> bool:
        """p satisface A p <= b (y la caja si use_box)"""
        check_dimension(self.dimension, p, "vector dual")
        if use_box and not self.box.contains(p):
            return False
        return all(row.satisfied_by(p) for row in self.rows)

    @property
    def matrix(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(row.coefficients for row in self.rows)

    @property
    def rhs(self) -> Tuple[int, ...]:
        return tuple(row.rhs for row in self.rows)


def build_subgradient_system(f: TableFunction, x: Sequence[int]) -> InequalitySystem:
    """
    Una fila por cada d != 0 con f(x + d) finito: d·p <= f(x + d) - f(x)

    Raises:
        PointOutsideDomain: Si x no pertenece a dom f
    """
    x = lattice_point(x)
    check_dimension(f.dimension, x, "punto")
    if x not in f:
        raise PointOutsideDomain(f"{x} no pertenece a dom f")
    base = f.entries[x]
    rows = []
    for d in directions(f.dimension):
        y = add_points(x, d)
        if y in f:
            rows.append(Inequality(d, f.entries[y] - base))
    logger.debug("Sistema de ∂f(%s): %d filas", x, len(rows))
    return InequalitySystem(f.dimension, tuple(rows))


def membership_check(f: TableFunction, x: Sequence[int], p: Sequence) -> bool:
    """
    p ∈ ∂f(x): f(y) - f(x) >= <p, y - x> para todo y ∈ dom f

    Raises:
        PointOutsideDomain: Si x no pertenece a dom f
    """
    x: LatticePoint = lattice_point(x)
    check_dimension(f.dimension, p, "vector dual")
    if x not in f:
        raise PointOutsideDomain(f"{x} no pertenece a dom f")
    base = f.entries[x]
    p = tuple(Fraction(c) for c in p)
    return all(
        value - base >= inner(p, [a - b for a, b in zip(y, x)]) for y, value in f.items()
    )
