"""
Funciones enteras con dominio efectivo finito
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from src.core.errors import DimensionMismatch, InvalidFunction, PointOutsideDomain
from src.core.extended import MINUS_INF, PLUS_INF, ExtendedInteger
from src.core.lattice import IntegralBox, LatticePoint, check_dimension, lattice_point


class Orientation(str, Enum):
    """Convexa (+inf fuera del dominio) o cóncava (-inf fuera del dominio)"""

    CONVEX = "convex"
    CONCAVE = "concave"

    @property
    def outside(self) -> ExtendedInteger:
        return PLUS_INF if self is Orientation.CONVEX else MINUS_INF

    def flipped(self) -> "Orientation":
        return Orientation.CONCAVE if self is Orientation.CONVEX else Orientation.CONVEX


@dataclass(frozen=True)
class TableFunction:
    """
    Función entera almacenada como mapa punto -> valor

    El dominio efectivo es el conjunto de claves; fuera de él la función
    vale +inf (orientación convexa) o -inf (cóncava).

    Attributes:
        dimension: Dimensión n
        entries: Valores enteros por punto
        orientation: Valor implícito fuera del dominio
        truncated: La tabla es una ventana de una función definida en todo Z^n
    """

    dimension: int
    entries: Mapping[LatticePoint, int]
    orientation: Orientation = Orientation.CONVEX
    truncated: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.dimension < 1:
            raise InvalidFunction("La dimensión debe ser >= 1")
        if not self.entries:
            raise InvalidFunction("El dominio efectivo no puede ser vacío")
        clean: Dict[LatticePoint, int] = {}
        for point, value in self.entries.items():
            point = lattice_point(point)
            check_dimension(self.dimension, point, "punto de la tabla")
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidFunction(f"Valor no entero en {point}: {value!r}")
            clean[point] = value
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    @classmethod
    def from_pairs(
        cls,
        pairs: Iterable[Tuple[Sequence[int], int]],
        orientation: Orientation = Orientation.CONVEX,
        truncated: bool = False,
    ) -> "TableFunction":
        pairs = [(tuple(p), v) for p, v in pairs]
        if not pairs:
            raise InvalidFunction("El dominio efectivo no puede ser vacío")
        return cls(len(pairs[0][0]), dict(pairs), orientation, truncated)

    @property
    def domain(self) -> Tuple[LatticePoint, ...]:
        return tuple(self.entries)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def items(self) -> Iterator[Tuple[LatticePoint, int]]:
        return iter(self.entries.items())

    def evaluate(self, x: Sequence[int]) -> ExtendedInteger:
        check_dimension(self.dimension, x, "punto")
        value = self.entries.get(tuple(x))
        if value is None:
            return self.orientation.outside
        return ExtendedInteger.finite(value)

    def value(self, x: Sequence[int]) -> int:
        """
        Valor finito en x

        Raises:
            PointOutsideDomain: Si x no está en el dominio efectivo
        """
        check_dimension(self.dimension, x, "punto")
        try:
            return self.entries[tuple(x)]
        except KeyError:
            raise PointOutsideDomain(f"{tuple(x)} no pertenece al dominio") from None

    def bounding_box(self) -> IntegralBox:
        return IntegralBox.bounding(self.domain)

    def negated(self) -> "TableFunction":
        return TableFunction(
            self.dimension,
            {p: -v for p, v in self.entries.items()},
            self.orientation.flipped(),
            self.truncated,
        )

    def restrict(self, points: Iterable[Sequence[int]]) -> "TableFunction":
        keep = {tuple(p) for p in points}
        return TableFunction(
            self.dimension,
            {p: v for p, v in self.entries.items() if p in keep},
            self.orientation,
        )


def evaluate(f, x: Sequence[int]) -> ExtendedInteger:
    """
    f(x) para tablas y funciones separables

    Raises:
        DimensionMismatch: Si x no tiene la dimensión de f
    """
    if len(x) != f.dimension:
        raise DimensionMismatch(f"Punto de dimensión {len(x)} para f en Z^{f.dimension}")
    return f.evaluate(x)


def indicator_table(points: Iterable[Sequence[int]]) -> TableFunction:
    """Función indicadora de un conjunto finito (0 en S)"""
    return TableFunction.from_pairs((p, 0) for p in points)


def tabulate(
    function,
    points: Iterable[Sequence[int]],
    orientation: Optional[Orientation] = None,
) -> TableFunction:
    """
    Tabula una función en los puntos dados, omitiendo los valores infinitos

    Raises:
        InvalidFunction: Si ningún punto tiene valor finito
    """
    orientation = orientation or getattr(function, "orientation", Orientation.CONVEX)
    entries = {}
    for p in points:
        value = function.evaluate(tuple(p))
        if value.is_finite:
            entries[tuple(p)] = value.value
    return TableFunction(function.dimension, entries, orientation)


def add_tables(f: TableFunction, g) -> TableFunction:
    """f + g sobre la intersección de dominios efectivos"""
    entries = {}
    for p, v in f.items():
        other = g.evaluate(p)
        if other.is_finite:
            entries[p] = v + other.value
    return TableFunction(f.dimension, entries, f.orientation)
