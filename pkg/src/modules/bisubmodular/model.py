"""
Funciones bisubmodulares sobre 3^N

Un par (X, Y) de subconjuntos disjuntos de N = {0, ..., n-1} se
identifica con el vector e_X - e_Y ∈ {-1,0,+1}^n.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, Mapping, Optional, Sequence, Tuple

from src.core.errors import InvalidFunction, UnboundedEnumeration
from src.core.lattice import IntegralBox, LatticePoint

logger = logging.getLogger(__name__)

SignedPair = Tuple[FrozenSet[int], FrozenSet[int]]

EMPTY: SignedPair = (frozenset(), frozenset())


def signed_pairs(n: int) -> Tuple[SignedPair, ...]:
    """Los 3^n pares (X, Y) disjuntos, comenzando por (∅, ∅)"""
    pairs = []
    for signs in itertools.product((0, 1, -1), repeat=n):
        pairs.append(from_vector(signs))
    return tuple(pairs)


def from_vector(x: Sequence[int]) -> SignedPair:
    return (
        frozenset(i for i, s in enumerate(x) if s == 1),
        frozenset(i for i, s in enumerate(x) if s == -1),
    )


def to_vector(pair: SignedPair, n: int) -> LatticePoint:
    X, Y = pair
    return tuple(1 if i in X else -1 if i in Y else 0 for i in range(n))


def weight(vector: Sequence, subset) -> Fraction:
    """z(S) = sum_{i ∈ S} z_i"""
    return sum((Fraction(vector[i]) for i in subset), Fraction(0))


def meet(a: SignedPair, b: SignedPair) -> SignedPair:
    return (a[0] & b[0], a[1] & b[1])


def join(a: SignedPair, b: SignedPair) -> SignedPair:
    X, Y = a[0] | b[0], a[1] | b[1]
    return (X - Y, Y - X)


def format_pair(pair: SignedPair) -> str:
    X, Y = pair
    show = lambda s: "{" + ",".join(str(i + 1) for i in sorted(s)) + "}"  # noqa: E731
    return f"({show(X)}, {show(Y)})"


@dataclass(frozen=True)
class BisubFunction:
    """
    Tabla f(X, Y) sobre todos los pares disjuntos, con f(∅, ∅) = 0

    Attributes:
        n: Tamaño del conjunto base
        values: Valor entero por par
    """

    n: int
    values: Mapping[SignedPair, int]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidFunction("El conjunto base debe tener n >= 1 elementos")
        clean: Dict[SignedPair, int] = {}
        for (X, Y), value in self.values.items():
            X, Y = frozenset(X), frozenset(Y)
            if X & Y:
                raise InvalidFunction(f"Par no disjunto {format_pair((X, Y))}")
            if any(i < 0 or i >= self.n for i in X | Y):
                raise InvalidFunction(f"Índice fuera de rango en {format_pair((X, Y))}")
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidFunction(f"Valor no entero en {format_pair((X, Y))}")
            clean[(X, Y)] = value
        missing = [p for p in signed_pairs(self.n) if p not in clean]
        if missing:
            raise InvalidFunction(f"Faltan {len(missing)} pares, p. ej. {format_pair(missing[0])}")
        if clean[EMPTY] != 0:
            raise InvalidFunction("Se requiere f(∅, ∅) = 0")
        object.__setattr__(self, "values", clean)

    @classmethod
    def from_function(cls, n: int, function) -> "BisubFunction":
        return cls(n, {pair: function(*pair) for pair in signed_pairs(n)})

    def __call__(self, X, Y) -> int:
        return self.values[(frozenset(X), frozenset(Y))]

    def items(self) -> Iterator[Tuple[SignedPair, int]]:
        for pair in signed_pairs(self.n):
            yield pair, self.values[pair]


def box_function(alpha: Sequence[int], beta: Sequence[int]) -> BisubFunction:
    """w(X, Y) = beta(X) - alpha(Y)"""
    n = len(alpha)
    return BisubFunction.from_function(
        n, lambda X, Y: int(weight(beta, X) - weight(alpha, Y))
    )


@dataclass(frozen=True)
class BisubmodularityResult:
    """
    Attributes:
        holds: La desigualdad vale para todos los pares
        violation: Primer par de pares que la viola
    """

    holds: bool
    violation: Optional[Tuple[SignedPair, SignedPair]] = None

    def __bool__(self) -> bool:
        return self.holds


def is_bisubmodular(f: BisubFunction) -> BisubmodularityResult:
    """
    f(X1,Y1) + f(X2,Y2) >= f(meet) + f(join) para todos los pares
    """
    pairs = signed_pairs(f.n)
    for i, a in enumerate(pairs):
        for b in pairs[i + 1:]:
            if f.values[a] + f.values[b] < f.values[meet(a, b)] + f.values[join(a, b)]:
                logger.debug("Bisubmodularidad violada en %s, %s", format_pair(a), format_pair(b))
                return BisubmodularityResult(False, (a, b))
    return BisubmodularityResult(True)


def polyhedron_membership(f: BisubFunction, z: Sequence) -> bool:
    """z ∈ P(f): z(X) - z(Y) <= f(X, Y) para todo (X, Y)"""
    if len(z) != f.n:
        raise InvalidFunction(f"Vector de largo {len(z)} para n = {f.n}")
    return all(weight(z, X) - weight(z, Y) <= value for (X, Y), value in f.items())


def enumerate_integer_points(
    f: BisubFunction, box: Optional[IntegralBox] = None
) -> Tuple[LatticePoint, ...]:
    """
    Puntos enteros de P(f) ∩ B, en orden lexicográfico

    Cada coordenada se acota por -f(∅, {i}) <= z_i <= f({i}, ∅).

    Raises:
        UnboundedEnumeration: Si alguna coordenada queda sin cota finita
    """
    box = box or IntegralBox.trivial(f.n)
    lower = tuple(-f((), (i,)) for i in range(f.n))
    upper = tuple(f((i,), ()) for i in range(f.n))
    if any(lo > hi for lo, hi in zip(lower, upper)):
        return ()
    region = box.intersect(IntegralBox(lower, upper))
    if region is None:
        return ()
    if not region.is_bounded:
        raise UnboundedEnumeration(f"La región {region} no es acotada")
    return tuple(z for z in region.points() if polyhedron_membership(f, z))


def sample_bisubmodular(
    rng: random.Random,
    n: int,
    value_range: Tuple[int, int] = (-2, 3),
    attempts: int = 5000,
) -> BisubFunction:
    """
    Función bisubmodular aleatoria

    Para n <= 2 se sortean tablas en value_range y se rechazan las que
    no son bisubmodulares. Para n mayor, o si no hay aceptación, se
    suma h(X ∪ Y), con h monótona submodular de presupuesto, a una
    función de caja aleatoria.
    """
    low, high = value_range
    if n <= 2:
        for _ in range(attempts):
            values = {pair: rng.randint(low, high) for pair in signed_pairs(n)}
            values[EMPTY] = 0
            f = BisubFunction(n, values)
            if is_bisubmodular(f):
                return f
        logger.debug("Sin aceptación por rechazo para n = %d; construcción directa", n)
    weights = [rng.randint(0, 2) for _ in range(n)]
    cap = rng.randint(1, max(1, sum(weights)))
    alpha = [rng.randint(-2, 0) for _ in range(n)]
    beta = [a + rng.randint(0, 2) for a in alpha]
    return BisubFunction.from_function(
        n,
        lambda X, Y: min(cap, sum(weights[i] for i in X | Y))
        + int(weight(beta, X) - weight(alpha, Y)),
    )
