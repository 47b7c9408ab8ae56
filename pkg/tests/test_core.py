"""
Tests para enteros extendidos, puntos y cajas
"""
from fractions import Fraction

import pytest

from src.core.errors import DimensionMismatch, OppositeInfinities, ParseError
from src.core.extended import MINUS_INF, PLUS_INF, ExtendedInteger, ext
from src.core.lattice import IntegralBox, directions, inner, lattice_point, sup_distance


@pytest.mark.unit
class TestExtendedInteger:
    """Tests básicos de la aritmética extendida"""

    def test_finite_sum(self):
        """Test suma de finitos"""
        assert ext(3) + ext(-5) == ext(-2)

    def test_infinity_absorbs(self):
        """Test +inf absorbe a los finitos"""
        assert PLUS_INF + 7 == PLUS_INF
        assert MINUS_INF - 7 == MINUS_INF

    def test_opposite_infinities(self):
        """Test +inf + -inf es un error"""
        with pytest.raises(OppositeInfinities):
            PLUS_INF + MINUS_INF

    def test_order(self):
        """Test orden total con infinidades"""
        values = [PLUS_INF, ext(2), MINUS_INF, ext(Fraction(1, 2))]
        assert sorted(values) == [MINUS_INF, ext(Fraction(1, 2)), ext(2), PLUS_INF]

    def test_fraction_normalizes(self):
        """Test un racional entero se normaliza a int"""
        value = ext(Fraction(4, 2))
        assert value.is_integer
        assert value.value == 2

    def test_parse_and_str(self):
        """Test lectura y forma canónica"""
        for text in ("+inf", "-inf", "17", "-3/4"):
            assert str(ExtendedInteger.parse(text)) == text

    def test_negation(self):
        """Test la negación intercambia las infinidades"""
        assert -PLUS_INF == MINUS_INF
        assert -ext(5) == ext(-5)

    def test_immutable(self):
        """Test los valores no se pueden modificar"""
        with pytest.raises(AttributeError):
            ext(1)._value = 2


@pytest.mark.unit
class TestLattice:
    """Tests de puntos, direcciones y cajas"""

    def test_lattice_point_rejects_fraction(self):
        """Test coordenadas no enteras"""
        with pytest.raises(TypeError):
            lattice_point((1, Fraction(1, 2)))

    def test_inner_and_distance(self):
        """Test producto interno y norma infinito"""
        assert inner((1, -2), (3, 4)) == -5
        assert sup_distance((1, -1), (-1, 0)) == 2

    def test_directions(self):
        """Test 3^n - 1 direcciones en orden lexicográfico"""
        found = list(directions(2))
        assert len(found) == 8
        assert found[0] == (-1, -1)
        assert (0, 0) not in found

    def test_box_points(self):
        """Test enumeración de una caja acotada"""
        box = IntegralBox.cube(2, 1)
        points = list(box.points())
        assert len(points) == 9
        assert points[0] == (-1, -1)

    def test_unbounded_box_cannot_enumerate(self):
        """Test una caja infinita no se enumera"""
        with pytest.raises(ValueError):
            list(IntegralBox.trivial(2).points())

    def test_box_contains_with_infinite_bounds(self):
        """Test pertenencia con cotas infinitas"""
        box = IntegralBox((ext(2), ext(-4)), (PLUS_INF, ext(4)))
        assert box.contains((100, 0))
        assert not box.contains((1, 0))

    def test_empty_box_rejected(self):
        """Test alpha > beta"""
        with pytest.raises(ValueError):
            IntegralBox((1,), (0,))

    def test_dimension_mismatch(self):
        """Test cotas de distinto largo"""
        with pytest.raises(DimensionMismatch):
            IntegralBox((0, 0), (1,))

    def test_interior_and_intersect(self):
        """Test reducción e intersección de cajas"""
        box = IntegralBox.cube(2, 2)
        assert box.interior() == IntegralBox.cube(2, 1)
        assert IntegralBox.cube(1, 1).interior().lower == (ext(0),)
        assert box.intersect(IntegralBox((ext(3), ext(0)), (ext(4), ext(0)))) is None


@pytest.mark.unit
class TestErrors:
    """Tests de la jerarquía de excepciones"""

    def test_parse_error_location(self):
        """Test ParseError con línea y columna"""
        error = ParseError("JSON inválido", 3, 7)
        assert error.line == 3
        assert error.column == 7
        assert "línea 3" in str(error)
        assert error.exit_code == 3

    def test_exit_codes(self):
        """Test códigos de salida por familia"""
        from src.core import errors

        assert errors.NotIntegrallyConvex.exit_code == 4
        assert errors.InternalInfeasible.exit_code == 4
        assert errors.InfeasiblePrecondition.exit_code == 2
        assert errors.BoxTooSmall.exit_code == 2
