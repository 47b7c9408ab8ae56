"""
Muestreo por rechazo de tablas con o sin convexidad integral
"""
import logging
import random
from typing import Tuple

from src.core.errors import InternalInfeasible
from src.core.lattice import IntegralBox, LatticePoint, add_points, directions
from src.modules.functions.model import TableFunction
from src.modules.integral_convexity.checks import is_integrally_convex_function

logger = logging.getLogger(__name__)


def _random_table(
    rng: random.Random, box: IntegralBox, value_range: Tuple[int, int]
) -> TableFunction:
    low, high = value_range
    return TableFunction(box.dimension, {x: rng.randint(low, high) for x in box.points()})


def sample_table(
    rng: random.Random,
    box: IntegralBox,
    value_range: Tuple[int, int] = (0, 4),
    integrally_convex: bool = True,
    attempts: int = 2000,
) -> TableFunction:
    """
    Tabla aleatoria sobre una caja acotada con el estado de convexidad pedido

    Raises:
        InternalInfeasible: Si ninguna muestra cumple tras `attempts` intentos
    """
    for attempt in range(attempts):
        f = _random_table(rng, box, value_range)
        if bool(is_integrally_convex_function(f)) == integrally_convex:
            logger.debug("Tabla aceptada tras %d intentos", attempt + 1)
            return f
    raise InternalInfeasible(f"Sin muestra aceptada en {attempts} intentos")


def _is_strict_local_minimum(f: TableFunction, x: LatticePoint) -> bool:
    value = f.entries[x]
    for d in directions(f.dimension):
        y = add_points(x, d)
        if y in f and f.entries[y] <= value:
            return False
    return True


def sample_local_not_global(
    rng: random.Random, attempts: int = 10000
) -> Tuple[TableFunction, LatticePoint]:
    """
    Tabla sobre [0,2]^2 con un mínimo local estricto que no es global

    Una tabla así nunca es integralmente convexa.

    Returns:
        Tuple[TableFunction, LatticePoint]: La tabla y el mínimo local

    Raises:
        InternalInfeasible: Si no se encuentra tras `attempts` intentos
    """
    box = IntegralBox.cube(2, 1, (1, 1))
    for _ in range(attempts):
        f = _random_table(rng, box, (0, 9))
        best = min(f.entries.values())
        for x, value in f.items():
            if value > best and _is_strict_local_minimum(f, x):
                return f, x
    raise InternalInfeasible(f"Sin mínimo local no global en {attempts} intentos")
