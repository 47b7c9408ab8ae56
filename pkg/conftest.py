"""
Pytest configuration and shared fixtures
"""
import random

import pytest

from src.cli.commands import concave_table, convex_table
from src.cli.serialization import load_instance
from src.config.settings import settings
from src.modules.functions import Orientation, SeparableFunction, UnivariatePiece


def _table(name: str):
    return convex_table(load_instance(settings.fixture_path(name)))


@pytest.fixture(scope="session")
def ex49():
    """
    Fixture con la función integralmente convexa de 9 puntos en [-1, 1]^2

    Returns:
        TableFunction: Tabla convexa
    """
    return _table("ex49")


@pytest.fixture(scope="session")
def r45():
    """
    Fixture con f = (x1 + x2 + x3) / 2 sobre un dominio no integralmente convexo

    Returns:
        TableFunction: Tabla de 7 puntos en Z^3
    """
    return _table("r45")


@pytest.fixture(scope="session")
def r46():
    """Fixture con la tabla de 4 puntos cuyo subdiferencial en 0 es no vacío"""
    return _table("r46")


@pytest.fixture(scope="session")
def r47():
    """Fixture con la tabla de 19 puntos con vértices no enteros en 0"""
    return _table("r47")


def _pair(name: str):
    instance = load_instance(settings.fixture_path(name))
    return convex_table(instance), concave_table(instance)


@pytest.fixture(scope="session")
def e35():
    """
    Fixture con f = |x1 + x2 - 1| y g = 1 - |x1 - x2| truncadas a [-3, 3]^2

    Returns:
        tuple: (f convexa, g cóncava)
    """
    return _pair("e35")


@pytest.fixture(scope="session")
def e36():
    """Fixture con f = max(0, x1 + x2) y g = min(x1, x2) truncadas a [-3, 3]^2"""
    return _pair("e36")


@pytest.fixture
def psi_l1():
    """
    Fixture con Psi(x) = -(|x1| + |x2|)

    Returns:
        SeparableFunction: Separable cóncava en Z^2
    """
    piece = UnivariatePiece.abs_form(1, 0, Orientation.CONCAVE)
    return SeparableFunction((piece, piece), Orientation.CONCAVE)


@pytest.fixture
def rng():
    """Generador con la semilla por defecto de la configuración"""
    return random.Random(settings.DEFAULT_SEED)


@pytest.fixture
def fixture_path():
    """Ruta de un archivo de instancia incluido"""
    return settings.fixture_path
