"""
Enteros extendidos Z ∪ {+inf, -inf}

Los valores finitos son enteros de precisión arbitraria. Las cotas
intermedias de proyecciones pueden ser racionales, por eso el valor
finito admite también Fraction; se normaliza a int cuando el
denominador es 1.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

from src.core.errors import OppositeInfinities

Number = Union[int, Fraction]


class Kind(str, Enum):
    """Tipo de valor extendido"""

    FINITE = "finite"
    PLUS_INFINITY = "plus_infinity"
    MINUS_INFINITY = "minus_infinity"


_RANK = {Kind.MINUS_INFINITY: -1, Kind.FINITE: 0, Kind.PLUS_INFINITY: 1}


def _normalize(value: Number) -> Number:
    if isinstance(value, bool):
        raise TypeError("bool no es un valor numérico válido")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"Valor no exacto: {value!r}")


@total_ordering
class ExtendedInteger:
    """
    Valor exacto o una de las dos infinidades

    Inmutable. Se compara y se suma también contra int y Fraction.
    """

    __slots__ = ("_kind", "_value")

    def __init__(self, kind: Kind, value: Optional[Number] = None):
        if kind is Kind.FINITE:
            if value is None:
                raise ValueError("Un valor finito requiere payload")
            value = _normalize(value)
        elif value is not None:
            raise ValueError("Las infinidades no llevan payload")
        object.__setattr__(self, "_kind", kind)
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedInteger es inmutable")

    @classmethod
    def finite(cls, value: Number) -> "ExtendedInteger":
        return cls(Kind.FINITE, value)

    @classmethod
    def plus_infinity(cls) -> "ExtendedInteger":
        return PLUS_INF

    @classmethod
    def minus_infinity(cls) -> "ExtendedInteger":
        return MINUS_INF

    @classmethod
    def parse(cls, text: str) -> "ExtendedInteger":
        """
        Lee "+inf", "-inf", un entero decimal o "num/den"

        Raises:
            ValueError: Si el texto no es un literal válido
        """
        token = text.strip()
        if token in ("+inf", "inf"):
            return PLUS_INF
        if token == "-inf":
            return MINUS_INF
        return cls.finite(Fraction(token))

    @property
    def kind(self) -> Kind:
        return self._kind

    @property
    def value(self) -> Optional[Number]:
        return self._value

    @property
    def is_finite(self) -> bool:
        return self._kind is Kind.FINITE

    @property
    def is_plus_infinity(self) -> bool:
        return self._kind is Kind.PLUS_INFINITY

    @property
    def is_minus_infinity(self) -> bool:
        return self._kind is Kind.MINUS_INFINITY

    @property
    def is_integer(self) -> bool:
        return self.is_finite and isinstance(self._value, int)

    def _key(self):
        return (_RANK[self._kind], self._value if self.is_finite else 0)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._kind is other._kind and self._value == other._value

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self) -> int:
        if self.is_finite:
            return hash(self._value)
        return hash(("extended", self._kind.value))

    def __add__(self, other) -> "ExtendedInteger":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ext_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "ExtendedInteger":
        if self.is_plus_infinity:
            return MINUS_INF
        if self.is_minus_infinity:
            return PLUS_INF
        return ExtendedInteger.finite(-self._value)

    def __sub__(self, other) -> "ExtendedInteger":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ext_add(self, -other)

    def __rsub__(self, other) -> "ExtendedInteger":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ext_add(other, -self)

    def __str__(self) -> str:
        if self.is_plus_infinity:
            return "+inf"
        if self.is_minus_infinity:
            return "-inf"
        return str(self._value)

    def __repr__(self) -> str:
        return f"ExtendedInteger({self})"


def _coerce(value) -> ExtendedInteger:
    if isinstance(value, ExtendedInteger):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return ExtendedInteger.finite(value)
    return NotImplemented


def ext(value: Union[ExtendedInteger, Number]) -> ExtendedInteger:
    """Convierte int/Fraction a ExtendedInteger"""
    coerced = _coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"No es un valor extendido: {value!r}")
    return coerced


def ext_add(a: ExtendedInteger, b: ExtendedInteger) -> ExtendedInteger:
    """
    Suma exacta con absorción de infinidades

    Raises:
        OppositeInfinities: Si se suman +inf y -inf
    """
    a, b = ext(a), ext(b)
    if a.is_finite and b.is_finite:
        return ExtendedInteger.finite(a.value + b.value)
    if {a.kind, b.kind} == {Kind.PLUS_INFINITY, Kind.MINUS_INFINITY}:
        raise OppositeInfinities(f"{a} + {b} no está definido")
    return a if not a.is_finite else b


PLUS_INF = ExtendedInteger(Kind.PLUS_INFINITY)
MINUS_INF = ExtendedInteger(Kind.MINUS_INFINITY)
