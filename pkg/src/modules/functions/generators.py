"""
Generadores de funciones integralmente convexas y separables cóncavas
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union

from src.core.lattice import IntegralBox
from src.modules.functions.model import Orientation, TableFunction
from src.modules.functions.separable import SeparableFunction, UnivariatePiece

Seed = Union[int, random.Random]


def _rng(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


@dataclass(frozen=True)
class TwoSeparableSpec:
    """
    Piezas de una función 2-separable convexa

        f(x) = sum phi_i(x_i) + sum phi_ij(x_i - x_j) + sum psi_ij(x_i + x_j)

    Attributes:
        univariate: phi_i por índice i
        differences: phi_ij por par (i, j)
        sums: psi_ij por par (i, j)
    """

    univariate: Dict[int, UnivariatePiece] = field(default_factory=dict)
    differences: Dict[Tuple[int, int], UnivariatePiece] = field(default_factory=dict)
    sums: Dict[Tuple[int, int], UnivariatePiece] = field(default_factory=dict)

    def evaluate(self, x):
        total = 0
        terms = [(piece, x[i]) for i, piece in self.univariate.items()]
        terms += [(piece, x[i] - x[j]) for (i, j), piece in self.differences.items()]
        terms += [(piece, x[i] + x[j]) for (i, j), piece in self.sums.items()]
        for piece, k in terms:
            value = piece.evaluate(k)
            if not value.is_finite:
                return None
            total += value.value
        return total


def random_convex_piece(
    rng: random.Random, lower: int, upper: int, max_slope: int = 2
) -> UnivariatePiece:
    """Pieza breakpoints convexa con pendientes enteras crecientes"""
    slopes = sorted(rng.randint(-max_slope, max_slope) for _ in range(upper - lower))
    values = [rng.randint(0, 2)]
    for s in slopes:
        values.append(values[-1] + s)
    return UnivariatePiece.breakpoints(lower, values)


def random_two_separable_spec(
    rng: random.Random, n: int, radius: int, max_slope: int = 2
) -> TwoSeparableSpec:
    """Piezas aleatorias cuyos dominios cubren [-radius, radius]^n"""
    univariate = {
        i: random_convex_piece(rng, -radius, radius, max_slope) for i in range(n)
    }
    differences, sums = {}, {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                differences[(i, j)] = random_convex_piece(
                    rng, -2 * radius, 2 * radius, max_slope
                )
            if rng.random() < 0.5:
                sums[(i, j)] = random_convex_piece(rng, -2 * radius, 2 * radius, max_slope)
    return TwoSeparableSpec(univariate, differences, sums)


def generate_2_separable(
    seed: Seed,
    n: int,
    box: Optional[IntegralBox] = None,
    spec: Optional[TwoSeparableSpec] = None,
) -> TableFunction:
    """
    Tabula una función 2-separable convexa sobre una caja finita

    Sin spec se sortean piezas convexas con la semilla dada. El resultado
    es integralmente convexo.

    Args:
        seed: Semilla o generador
        n: Dimensión
        box: Caja de tabulación; por defecto [-1, 1]^n
        spec: Piezas explícitas
    """
    rng = _rng(seed)
    box = box or IntegralBox.cube(n, 1)
    if spec is None:
        radius = max(max(abs(b.value) for b in box.lower + box.upper), 1)
        spec = random_two_separable_spec(rng, n, radius)
    entries = {}
    for x in box.points():
        value = spec.evaluate(x)
        if value is not None:
            entries[x] = value
    return TableFunction(n, entries)


def generate_diagonally_dominant_quadratic(
    seed: Seed, n: int, box: Optional[IntegralBox] = None, max_entry: int = 2
) -> TableFunction:
    """
    f(x) = x^T Q x con Q simétrica y q_ii >= sum_{j != i} |q_ij|
    """
    rng = _rng(seed)
    box = box or IntegralBox.cube(n, 1)
    q = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            q[i][j] = q[j][i] = rng.randint(-max_entry, max_entry)
    for i in range(n):
        q[i][i] = sum(abs(q[i][j]) for j in range(n) if j != i) + rng.randint(0, max_entry)
    entries = {
        x: sum(q[i][j] * x[i] * x[j] for i in range(n) for j in range(n))
        for x in box.points()
    }
    return TableFunction(n, entries)


def random_concave_piece(rng: random.Random, window: int = 3) -> UnivariatePiece:
    """Pieza cóncava aleatoria cuyo dominio contiene a 0"""
    concave = Orientation.CONCAVE
    kind = rng.choice(("breakpoints", "abs", "quad", "linear", "kinked"))
    if kind == "breakpoints":
        lower, upper = rng.randint(-window, 0), rng.randint(0, window)
        slopes = sorted(
            (rng.randint(-3, 3) for _ in range(upper - lower)), reverse=True
        )
        values = [rng.randint(-2, 2)]
        for s in slopes:
            values.append(values[-1] + s)
        return UnivariatePiece.breakpoints(lower, values, concave)
    if kind == "abs":
        return UnivariatePiece.abs_form(rng.randint(0, 3), rng.randint(-1, 1), concave)
    if kind == "quad":
        return UnivariatePiece.quad_form(rng.randint(1, 2), rng.randint(-1, 1), concave)
    if kind == "linear":
        return UnivariatePiece.linear_form(rng.randint(-2, 2), concave)
    right = rng.randint(-3, 3)
    return UnivariatePiece.kinked_form(
        rng.randint(-1, 1), right + rng.randint(0, 3), right, concave
    )


def random_separable_concave(seed: Seed, n: int, window: int = 3) -> SeparableFunction:
    """Psi separable cóncava aleatoria con 0 ∈ dom Psi"""
    rng = _rng(seed)
    return SeparableFunction(
        tuple(random_concave_piece(rng, window) for _ in range(n)), Orientation.CONCAVE
    )
