"""
Fórmulas min-max para poliedros bisubmodulares y convolución con una caja
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from src.core.errors import InfeasiblePrecondition, InternalInfeasible
from src.core.lattice import IntegralBox, LatticePoint
from src.modules.bisubmodular.model import (
    BisubFunction,
    SignedPair,
    enumerate_integer_points,
    format_pair,
    is_bisubmodular,
    polyhedron_membership,
    signed_pairs,
    weight,
)
from src.modules.functions.model import Orientation
from src.modules.functions.separable import SeparableFunction, UnivariatePiece

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinMaxResult:
    """
    Ambos lados de una fórmula min-max con sus testigos

    Attributes:
        lhs: Máximo sobre los puntos enteros del poliedro
        rhs: Mínimo sobre los pares (X, Y)
        primal_witness: z que alcanza el máximo
        dual_witness: (X, Y) que alcanza el mínimo
    """

    lhs: int
    rhs: int
    primal_witness: LatticePoint
    dual_witness: SignedPair


def _check_bounds(alpha: Sequence[int], beta: Sequence[int], n: int) -> None:
    if len(alpha) != n or len(beta) != n:
        raise InfeasiblePrecondition("alpha y beta deben tener largo n")
    if any(a > b for a, b in zip(alpha, beta)):
        raise InfeasiblePrecondition("Se requiere alpha <= beta")


def _settle(lhs, primal, rhs, dual, label: str) -> MinMaxResult:
    if lhs != rhs:
        raise InternalInfeasible(f"{label}: max = {lhs} != min = {rhs}")
    logger.debug("%s: %s en %s / %s", label, lhs, primal, format_pair(dual))
    return MinMaxResult(int(lhs), int(rhs), primal, dual)


def minmax_cgk(f: BisubFunction, w: Sequence[int]) -> MinMaxResult:
    """
    max { z(N) : z ∈ P(f) ∩ Z^n, z <= w } = min { f(X,Y) + w(N \\ X) + w(Y) }

    Raises:
        InfeasiblePrecondition: Si ningún z ∈ P(f) cumple z <= w
    """
    n = f.n
    ground = frozenset(range(n))
    box = IntegralBox(tuple(IntegralBox.trivial(n).lower), tuple(w))
    points = enumerate_integer_points(f, box)
    if not points:
        raise InfeasiblePrecondition(f"No hay z ∈ P(f) con z <= {tuple(w)}")
    primal = max(points, key=lambda z: sum(z))
    dual = min(
        signed_pairs(n),
        key=lambda pair: f.values[pair] + weight(w, ground - pair[0]) + weight(w, pair[1]),
    )
    rhs = f.values[dual] + weight(w, ground - dual[0]) + weight(w, dual[1])
    return _settle(sum(primal), primal, rhs, dual, "CGK")


def signed_box_correction(
    pair: SignedPair, alpha: Sequence[int], beta: Sequence[int], A, B
) -> Fraction:
    """beta(A \\ X) + beta(Y \\ B) - alpha(B \\ Y) - alpha(X \\ A)"""
    X, Y = pair
    A, B = frozenset(A), frozenset(B)
    return (
        weight(beta, A - X) + weight(beta, Y - B) - weight(alpha, B - Y) - weight(alpha, X - A)
    )


def minmax_fp(
    f: BisubFunction,
    alpha: Sequence[int],
    beta: Sequence[int],
    A: Iterable[int],
    B: Iterable[int],
    points: Optional[Sequence[LatticePoint]] = None,
) -> MinMaxResult:
    """
    max { z(A) - z(B) : z ∈ P(f) ∩ Z^n, alpha <= z <= beta }
        = min { f(X,Y) + beta(A\\X) + beta(Y\\B) - alpha(B\\Y) - alpha(X\\A) }

    Args:
        points: Puntos enteros de P(f) ∩ [alpha, beta] ya enumerados

    Raises:
        InfeasiblePrecondition: Si P(f) ∩ [alpha, beta] no tiene puntos
    """
    A, B = frozenset(A), frozenset(B)
    if A & B:
        raise InfeasiblePrecondition("A y B deben ser disjuntos")
    _check_bounds(alpha, beta, f.n)
    if points is None:
        points = enumerate_integer_points(f, IntegralBox(tuple(alpha), tuple(beta)))
    if not points:
        raise InfeasiblePrecondition("P(f) ∩ [alpha, beta] no tiene puntos enteros")
    primal = max(points, key=lambda z: weight(z, A) - weight(z, B))
    dual = min(
        signed_pairs(f.n),
        key=lambda pair: f.values[pair] + signed_box_correction(pair, alpha, beta, A, B),
    )
    lhs = weight(primal, A) - weight(primal, B)
    rhs = f.values[dual] + signed_box_correction(dual, alpha, beta, A, B)
    return _settle(lhs, primal, rhs, dual, "FP")


def box_convolution(f: BisubFunction, alpha: Sequence[int], beta: Sequence[int]) -> BisubFunction:
    """
    (f ∘ w)(A, B) = min { f(X,Y) + w(A\\X, B\\Y) + w(Y\\B, X\\A) } con w(S,T) = beta(S) - alpha(T)

    Raises:
        InfeasiblePrecondition: Si alpha > beta o P(f) ∩ [alpha, beta] = ∅
        InternalInfeasible: Si el resultado no es bisubmodular
    """
    _check_bounds(alpha, beta, f.n)
    pairs = signed_pairs(f.n)
    values = {
        (A, B): int(
            min(f.values[pair] + signed_box_correction(pair, alpha, beta, A, B) for pair in pairs)
        )
        for A, B in pairs
    }
    if values[pairs[0]] != 0:
        raise InfeasiblePrecondition(
            f"(f∘w)(∅,∅) = {values[pairs[0]]}: P(f) no intersecta la caja"
        )
    convolution = BisubFunction(f.n, values)
    if not is_bisubmodular(convolution):
        raise InternalInfeasible("La convolución con la caja no es bisubmodular")
    return convolution


def convolution_membership_audit(
    f: BisubFunction,
    alpha: Sequence[int],
    beta: Sequence[int],
    convolution: BisubFunction,
    samples: Iterable[Sequence],
) -> bool:
    """z ∈ P(f ∘ w) si y sólo si z ∈ P(f) y alpha <= z <= beta, en cada muestra"""
    for z in samples:
        in_box = all(a <= c <= b for a, c, b in zip(alpha, z, beta))
        expected = in_box and polyhedron_membership(f, z)
        if polyhedron_membership(convolution, z) != expected:
            logger.warning("P(f∘w) difiere de P(f) ∩ caja en %s", tuple(z))
            return False
    return True


def build_psi_from_signed_pair(
    A: Iterable[int], B: Iterable[int], alpha: Sequence[int], beta: Sequence[int], n: int
) -> SeparableFunction:
    """
    Psi separable cóncava lineal por tramos con quiebre en 1 (i ∈ A),
    -1 (i ∈ B) o 0 (resto), pendiente beta_i a la izquierda y alpha_i a
    la derecha

    Cumple -Psi(e_X - e_Y) = beta(A\\X) + beta(Y\\B) - alpha(B\\Y) - alpha(X\\A).
    """
    A, B = frozenset(A), frozenset(B)
    if A & B:
        raise InfeasiblePrecondition("A y B deben ser disjuntos")
    _check_bounds(alpha, beta, n)
    pieces = []
    for i in range(n):
        k0 = 1 if i in A else -1 if i in B else 0
        pieces.append(
            UnivariatePiece.kinked_form(k0, beta[i], alpha[i], Orientation.CONCAVE)
        )
    return SeparableFunction(tuple(pieces), Orientation.CONCAVE)
