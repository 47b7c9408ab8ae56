"""
Puntos de Z^n, vectores racionales y cajas integrales
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple, Union

from src.core.errors import DimensionMismatch
from src.core.extended import MINUS_INF, PLUS_INF, ExtendedInteger, ext

Rational = Fraction
LatticePoint = Tuple[int, ...]
RationalVector = Tuple[Fraction, ...]


def lattice_point(coords: Iterable[int]) -> LatticePoint:
    """Valida y congela un punto entero"""
    point = tuple(coords)
    if not point:
        raise DimensionMismatch("Un punto requiere dimensión n >= 1")
    for c in point:
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"Coordenada no entera: {c!r}")
    return point


def as_rational(value: Union[int, Fraction, str]) -> Fraction:
    return Fraction(value)


def rational_vector(coords: Iterable[Union[int, Fraction, str]]) -> RationalVector:
    return tuple(Fraction(c) for c in coords)


def is_integral(vector: Sequence[Fraction]) -> bool:
    return all(Fraction(c).denominator == 1 for c in vector)


def check_dimension(expected: int, vector: Sequence, what: str = "vector") -> None:
    if len(vector) != expected:
        raise DimensionMismatch(
            f"{what} de dimensión {len(vector)}, se esperaba {expected}"
        )


def inner(p: Sequence, x: Sequence):
    """Producto interno exacto"""
    return sum((a * b for a, b in zip(p, x)), 0)


def sup_distance(x: Sequence, y: Sequence):
    """Norma infinito de x - y"""
    return max(abs(a - b) for a, b in zip(x, y))


def add_points(x: LatticePoint, d: Sequence[int]) -> LatticePoint:
    return tuple(a + b for a, b in zip(x, d))


def directions(n: int) -> Iterator[LatticePoint]:
    """Vectores d en {-1,0,+1}^n distintos de cero, en orden lexicográfico"""
    for d in itertools.product((-1, 0, 1), repeat=n):
        if any(d):
            yield d


@dataclass(frozen=True)
class IntegralBox:
    """
    Caja [alpha, beta] con extremos enteros posiblemente infinitos

    Attributes:
        lower: Cotas inferiores alpha (nunca +inf)
        upper: Cotas superiores beta (nunca -inf)
    """

    lower: Tuple[ExtendedInteger, ...]
    upper: Tuple[ExtendedInteger, ...]

    def __post_init__(self):
        lower = tuple(ext(v) for v in self.lower)
        upper = tuple(ext(v) for v in self.upper)
        if len(lower) != len(upper):
            raise DimensionMismatch("Cotas inferior y superior de distinto largo")
        for lo, hi in zip(lower, upper):
            if lo.is_plus_infinity or hi.is_minus_infinity:
                raise ValueError(f"Cotas inválidas [{lo}, {hi}]")
            if lo > hi:
                raise ValueError(f"Caja vacía: {lo} > {hi}")
            for bound in (lo, hi):
                if bound.is_finite and not bound.is_integer:
                    raise ValueError(f"Cota no entera: {bound}")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def trivial(cls, n: int) -> "IntegralBox":
        """Caja sin restricciones (-inf, +inf)^n"""
        return cls((MINUS_INF,) * n, (PLUS_INF,) * n)

    @classmethod
    def cube(cls, n: int, radius: int, center: Sequence[int] = ()) -> "IntegralBox":
        center = tuple(center) or (0,) * n
        return cls(
            tuple(c - radius for c in center), tuple(c + radius for c in center)
        )

    @classmethod
    def bounding(cls, points: Iterable[Sequence[int]]) -> "IntegralBox":
        """Caja mínima que contiene a los puntos"""
        points = list(points)
        n = len(points[0])
        return cls(
            tuple(min(p[j] for p in points) for j in range(n)),
            tuple(max(p[j] for p in points) for j in range(n)),
        )

    @property
    def dimension(self) -> int:
        return len(self.lower)

    @property
    def is_bounded(self) -> bool:
        return all(b.is_finite for b in self.lower + self.upper)

    def contains(self, p: Sequence) -> bool:
        check_dimension(self.dimension, p, "punto")
        return all(lo <= c <= hi for lo, c, hi in zip(self.lower, p, self.upper))

    def points(self) -> Iterator[LatticePoint]:
        """Puntos enteros en orden lexicográfico; requiere caja acotada"""
        if not self.is_bounded:
            raise ValueError("No se pueden enumerar los puntos de una caja no acotada")
        ranges = [
            range(lo.value, hi.value + 1) for lo, hi in zip(self.lower, self.upper)
        ]
        return itertools.product(*ranges)

    def interior(self) -> "IntegralBox | None":
        """La caja reducida en una unidad por lado, o None si queda vacía"""
        lower = tuple(lo + 1 for lo in self.lower)
        upper = tuple(hi - 1 for hi in self.upper)
        if any(lo > hi for lo, hi in zip(lower, upper)):
            return None
        return IntegralBox(lower, upper)

    def intersect(self, other: "IntegralBox") -> "IntegralBox | None":
        check_dimension(self.dimension, other.lower, "caja")
        lower = tuple(max(a, b) for a, b in zip(self.lower, other.lower))
        upper = tuple(min(a, b) for a, b in zip(self.upper, other.upper))
        if any(lo > hi for lo, hi in zip(lower, upper)):
            return None
        return IntegralBox(lower, upper)

    def __str__(self) -> str:
        return " x ".join(f"[{lo}, {hi}]" for lo, hi in zip(self.lower, self.upper))


def box_contains(box: IntegralBox, p: Sequence) -> bool:
    """
    alpha_j <= p_j <= beta_j para todo j

    Raises:
        DimensionMismatch: Si p no tiene la dimensión de la caja
    """
    return box.contains(p)
