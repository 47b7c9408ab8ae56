"""
Funciones separables convexas y cóncavas

Cada pieza univariada es una tabla de valores sobre un intervalo finito
o una forma cerrada con dominio posiblemente infinito:

    abs_form     alpha·|k - k0|                 (alpha >= 0)
    quad_form    beta·(k - k0)^2                (beta >= 1)
    linear_form  c·k
    kinked_form  left·(k - k0) si k <= k0, right·(k - k0) si k >= k0

En orientación cóncava abs_form y quad_form se niegan (-alpha|k - k0|,
-beta(k - k0)^2); linear_form y kinked_form se interpretan tal cual y
la concavidad exige left >= right.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Sequence, Tuple

from src.core.errors import InvalidFunction, PointOutsideDomain
from src.core.extended import MINUS_INF, PLUS_INF, ExtendedInteger, ext
from src.core.lattice import IntegralBox, LatticePoint, check_dimension
from src.modules.functions.model import Orientation

logger = logging.getLogger(__name__)


class Shape(str, Enum):
    BREAKPOINTS = "breakpoints"
    ABS_FORM = "abs_form"
    QUAD_FORM = "quad_form"
    LINEAR_FORM = "linear_form"
    KINKED_FORM = "kinked_form"


@dataclass(frozen=True)
class UnivariatePiece:
    """
    Pieza univariada discreta convexa o cóncava

    Attributes:
        shape: Forma de la pieza
        orientation: Convexa o cóncava
        lower: Extremo izquierdo del dominio
        upper: Extremo derecho del dominio
        params: Parámetros de la forma cerrada (alpha, beta, k0, c, left, right)
        values: Valores de una pieza breakpoints, desde lower hasta upper
    """

    shape: Shape
    orientation: Orientation
    lower: ExtendedInteger = MINUS_INF
    upper: ExtendedInteger = PLUS_INF
    params: Dict[str, int] = field(default_factory=dict)
    values: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lower", ext(self.lower))
        object.__setattr__(self, "upper", ext(self.upper))
        object.__setattr__(self, "params", dict(self.params))
        object.__setattr__(self, "values", tuple(self.values))
        if self.lower.is_plus_infinity or self.upper.is_minus_infinity:
            raise InvalidFunction("Dominio de pieza inválido")
        if self.lower > self.upper:
            raise InvalidFunction(f"Dominio vacío [{self.lower}, {self.upper}]")
        self._validate()

    def _validate(self) -> None:
        p = self.params
        if self.shape is Shape.BREAKPOINTS:
            if not (self.lower.is_finite and self.upper.is_finite):
                raise InvalidFunction("Una pieza breakpoints requiere dominio finito")
            if len(self.values) != self.upper.value - self.lower.value + 1:
                raise InvalidFunction("Cantidad de valores distinta al largo del dominio")
            sign = 1 if self.orientation is Orientation.CONVEX else -1
            for a, b, c in zip(self.values, self.values[1:], self.values[2:]):
                if sign * (a + c - 2 * b) < 0:
                    raise InvalidFunction(
                        f"La pieza breakpoints no es {self.orientation.value}"
                    )
        elif self.shape is Shape.ABS_FORM:
            if p.get("alpha", -1) < 0 or "k0" not in p:
                raise InvalidFunction("abs_form requiere alpha >= 0 y k0")
        elif self.shape is Shape.QUAD_FORM:
            if p.get("beta", 0) < 1 or "k0" not in p:
                raise InvalidFunction("quad_form requiere beta >= 1 y k0")
        elif self.shape is Shape.LINEAR_FORM:
            if "c" not in p:
                raise InvalidFunction("linear_form requiere la pendiente c")
        elif self.shape is Shape.KINKED_FORM:
            if not {"k0", "left", "right"} <= set(p):
                raise InvalidFunction("kinked_form requiere k0, left y right")
            convex = p["left"] <= p["right"]
            concave = p["left"] >= p["right"]
            if self.orientation is Orientation.CONVEX and not convex:
                raise InvalidFunction("kinked_form convexa requiere left <= right")
            if self.orientation is Orientation.CONCAVE and not concave:
                raise InvalidFunction("kinked_form cóncava requiere left >= right")

    # Constructores

    @classmethod
    def breakpoints(
        cls, start: int, values: Sequence[int], orientation: Orientation = Orientation.CONVEX
    ) -> "UnivariatePiece":
        return cls(
            Shape.BREAKPOINTS, orientation, start, start + len(values) - 1, values=values
        )

    @classmethod
    def abs_form(
        cls, alpha: int, k0: int = 0, orientation: Orientation = Orientation.CONVEX,
        lower=MINUS_INF, upper=PLUS_INF,
    ) -> "UnivariatePiece":
        return cls(Shape.ABS_FORM, orientation, lower, upper, {"alpha": alpha, "k0": k0})

    @classmethod
    def quad_form(
        cls, beta: int, k0: int = 0, orientation: Orientation = Orientation.CONVEX,
        lower=MINUS_INF, upper=PLUS_INF,
    ) -> "UnivariatePiece":
        return cls(Shape.QUAD_FORM, orientation, lower, upper, {"beta": beta, "k0": k0})

    @classmethod
    def linear_form(
        cls, c: int, orientation: Orientation = Orientation.CONVEX,
        lower=MINUS_INF, upper=PLUS_INF,
    ) -> "UnivariatePiece":
        return cls(Shape.LINEAR_FORM, orientation, lower, upper, {"c": c})

    @classmethod
    def kinked_form(
        cls, k0: int, left: int, right: int, orientation: Orientation = Orientation.CONVEX,
        lower=MINUS_INF, upper=PLUS_INF,
    ) -> "UnivariatePiece":
        return cls(
            Shape.KINKED_FORM, orientation, lower, upper,
            {"k0": k0, "left": left, "right": right},
        )

    # Evaluación

    @property
    def is_closed_form(self) -> bool:
        return self.shape is not Shape.BREAKPOINTS

    @property
    def is_unbounded_domain(self) -> bool:
        return not self.lower.is_finite and not self.upper.is_finite

    def contains(self, k: int) -> bool:
        return self.lower <= k <= self.upper

    def _raw(self, k: int) -> int:
        """Valor de la forma sin verificar el dominio"""
        p = self.params
        if self.shape is Shape.BREAKPOINTS:
            return self.values[k - self.lower.value]
        if self.shape is Shape.LINEAR_FORM:
            return p["c"] * k
        if self.shape is Shape.KINKED_FORM:
            slope = p["left"] if k <= p["k0"] else p["right"]
            return slope * (k - p["k0"])
        sign = 1 if self.orientation is Orientation.CONVEX else -1
        if self.shape is Shape.ABS_FORM:
            return sign * p["alpha"] * abs(k - p["k0"])
        return sign * p["beta"] * (k - p["k0"]) ** 2

    def evaluate(self, k: int) -> ExtendedInteger:
        if not self.contains(k):
            return self.orientation.outside
        return ExtendedInteger.finite(self._raw(k))

    def negated(self) -> "UnivariatePiece":
        """-phi, con la orientación opuesta"""
        flipped = self.orientation.flipped()
        p = self.params
        if self.shape is Shape.BREAKPOINTS:
            return UnivariatePiece(
                self.shape, flipped, self.lower, self.upper, values=[-v for v in self.values]
            )
        if self.shape is Shape.LINEAR_FORM:
            return UnivariatePiece(self.shape, flipped, self.lower, self.upper, {"c": -p["c"]})
        if self.shape is Shape.KINKED_FORM:
            return UnivariatePiece(
                self.shape, flipped, self.lower, self.upper,
                {"k0": p["k0"], "left": -p["left"], "right": -p["right"]},
            )
        return UnivariatePiece(self.shape, flipped, self.lower, self.upper, p)

    def clamp(self, k: ExtendedInteger) -> ExtendedInteger:
        """Proyecta k (o una dirección infinita) sobre el dominio"""
        return max(self.lower, min(self.upper, ext(k)))


@dataclass(frozen=True)
class SeparableFunction:
    """
    Phi(x) = sum_i phi_i(x_i)

    Attributes:
        pieces: Una pieza por coordenada
        orientation: Orientación común a todas las piezas
    """

    pieces: Tuple[UnivariatePiece, ...]
    orientation: Orientation

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if not self.pieces:
            raise InvalidFunction("Una función separable requiere n >= 1 piezas")
        for piece in self.pieces:
            if piece.orientation is not self.orientation:
                raise InvalidFunction("Todas las piezas deben compartir la orientación")

    @property
    def dimension(self) -> int:
        return len(self.pieces)

    def evaluate(self, x: Sequence[int]) -> ExtendedInteger:
        check_dimension(self.dimension, x, "punto")
        total = ExtendedInteger.finite(0)
        for piece, k in zip(self.pieces, x):
            total = total + piece.evaluate(k)
        return total

    def in_domain(self, x: Sequence[int]) -> bool:
        return all(piece.contains(k) for piece, k in zip(self.pieces, x))

    def domain_box(self) -> IntegralBox:
        return IntegralBox(
            tuple(p.lower for p in self.pieces), tuple(p.upper for p in self.pieces)
        )

    def negated(self) -> "SeparableFunction":
        return SeparableFunction(
            tuple(p.negated() for p in self.pieces), self.orientation.flipped()
        )


def univariate_slopes(
    piece: UnivariatePiece, k: int
) -> Tuple[ExtendedInteger, ExtendedInteger]:
    """
    Subdiferencial [phi(k) - phi(k-1), phi(k+1) - phi(k)] de una pieza convexa

    El extremo izquierdo es -inf si k-1 cae fuera del dominio y el derecho
    +inf si k+1 cae fuera.
    """
    if piece.orientation is not Orientation.CONVEX:
        raise InvalidFunction("Las pendientes se definen para piezas convexas")
    if not piece.contains(k):
        raise PointOutsideDomain(f"{k} fuera del dominio de la pieza")
    here = piece.evaluate(k)
    left_value = piece.evaluate(k - 1)
    right_value = piece.evaluate(k + 1)
    left = here - left_value if left_value.is_finite else MINUS_INF
    right = right_value - here if right_value.is_finite else PLUS_INF
    return left, right


def subdifferential_box_of_separable(
    phi: SeparableFunction, x: LatticePoint
) -> IntegralBox:
    """
    La caja B = -∂Phi(x) de una función separable convexa

    Por coordenada: [-(phi_j(x_j+1) - phi_j(x_j)), -(phi_j(x_j) - phi_j(x_j-1))],
    con -inf si x_j es el extremo derecho y +inf si es el izquierdo.

    Raises:
        PointOutsideDomain: Si x no pertenece a dom Phi
    """
    if phi.orientation is not Orientation.CONVEX:
        raise InvalidFunction("Se requiere una función separable convexa")
    check_dimension(phi.dimension, x, "punto")
    if not phi.in_domain(x):
        raise PointOutsideDomain(f"{tuple(x)} no pertenece a dom Phi")
    lower, upper = [], []
    for piece, k in zip(phi.pieces, x):
        left, right = univariate_slopes(piece, k)
        lower.append(-right)
        upper.append(-left)
    box = IntegralBox(tuple(lower), tuple(upper))
    logger.debug("Caja -∂Phi(%s) = %s", tuple(x), box)
    return box
