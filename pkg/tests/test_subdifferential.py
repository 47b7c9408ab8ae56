"""
Tests para el sistema del subdiferencial, IQ(ℓ), Fourier-Motzkin y extracción
"""
import random
from fractions import Fraction

import pytest

from src.core.errors import NotIntegrallyConvex, PointOutsideDomain, UnboundedRegion
from src.core.extended import MINUS_INF, PLUS_INF, ext
from src.core.lattice import IntegralBox
from src.modules.subdifferential import (
    InequalitySystem,
    Interval,
    RationalSystem,
    build_iq,
    build_subgradient_system,
    enumerate_vertices,
    extract_integral_subgradient,
    fm_reduced_system,
    generic_fourier_motzkin,
    has_integral_subgradient,
    interval_of_rational_system,
    iq_projection_audit,
    is_empty_by_elimination,
    is_integral_vertex,
    membership_check,
    naive_box_intervals,
    project_fourier_motzkin,
    random_integral_box,
    reduced_slice,
    reduced_system_audit,
    round_subgradient,
    rounding_box,
)
from src.modules.subdifferential.system import format_linear_form

HALF = Fraction(1, 2)
EX49_BOX = IntegralBox((ext(2), ext(-4)), (PLUS_INF, ext(4)))


@pytest.fixture
def ex49_system(ex49):
    """Sistema de ∂f(0, 0) para la tabla de 9 puntos"""
    return build_subgradient_system(ex49, (0, 0))


@pytest.mark.unit
class TestSubgradientSystem:
    """Tests de A p <= b"""

    def test_rows(self, ex49_system):
        """Test una fila por vecino del dominio"""
        assert len(ex49_system.rows) == 8
        assert str(ex49_system.rows[0]) == "-p1 - p2 <= 3"

    def test_format_linear_form(self):
        """Test texto de formas lineales"""
        assert format_linear_form((1, -1)) == "p1 - p2"
        assert format_linear_form((0, -2), start=1) == "-2·p2"
        assert format_linear_form((0, 0)) == "0"

    def test_outside_domain(self, ex49):
        """Test punto fuera de dom f"""
        with pytest.raises(PointOutsideDomain):
            build_subgradient_system(ex49, (3, 3))

    def test_membership(self, ex49):
        """Test pertenencia a ∂f(0)"""
        assert membership_check(ex49, (0, 0), (2, -2))
        assert membership_check(ex49, (0, 0), (Fraction(5, 2), -HALF))
        assert not membership_check(ex49, (0, 0), (5, 0))

    def test_satisfied_by_box(self, ex49_system):
        """Test la caja se aplica sólo si se pide"""
        boxed = ex49_system.with_box(EX49_BOX)
        assert boxed.satisfied_by((0, 0), use_box=False)
        assert not boxed.satisfied_by((0, 0))
        assert boxed.without_box().box == IntegralBox.trivial(2)


@pytest.mark.unit
class TestReducedSystem:
    """Tests de la filtración de índices"""

    def test_level_one(self, ex49_system):
        """Test cotas de p1 en términos de p2"""
        levels = fm_reduced_system(ex49_system)
        assert str(levels[0]) == "max{-p2 - 3, -2, p2 - 2} <= p1 <= min{p2 + 4, 4, -p2 + 4}"

    def test_level_two(self, ex49_system):
        """Test cotas de p2"""
        levels = fm_reduced_system(ex49_system)
        assert str(levels[1].interval(())) == "[-3, 3]"

    def test_naive_box_is_loose(self, ex49_system):
        """Test la caja nivel a nivel no da la proyección"""
        levels = naive_box_intervals(ex49_system, EX49_BOX)
        assert str(levels[1].interval(())) == "[-3, 3]"

    def test_reduced_slice(self, ex49_system):
        """Test corte de p1 para p2 = 0"""
        levels = fm_reduced_system(ex49_system)
        assert reduced_slice(levels, 1, (0,)) == Interval(ext(-2), ext(4))
        assert reduced_slice(levels, 1, (7,)).is_empty


@pytest.mark.unit
class TestIQ:
    """Tests del sistema IQ(ℓ) con caja"""

    def test_projection_with_box(self, ex49_system):
        """Test -2 <= p2 <= 2 con la caja"""
        iq = build_iq(ex49_system, EX49_BOX, 2)
        assert iq.projection_interval(()) == Interval(ext(-2), ext(2))

    def test_level_one_slice(self, ex49_system):
        """Test p1 ∈ [2, 4] para p2 = 0"""
        iq = build_iq(ex49_system, EX49_BOX, 1)
        assert iq.projection_interval((0,)) == Interval(ext(2), ext(4))

    def test_trivial_box(self, ex49_system):
        """Test sin caja IQ(n) coincide con el sistema reducido"""
        iq = build_iq(ex49_system, None, 2)
        assert iq.projection_interval(()) == Interval(ext(-3), ext(3))

    def test_invalid_level(self, ex49_system):
        """Test nivel fuera de rango"""
        with pytest.raises(ValueError):
            build_iq(ex49_system, None, 3)

    def test_interval_text(self):
        """Test forma textual de intervalos"""
        assert str(Interval.empty()) == "empty"
        assert str(Interval(MINUS_INF, ext(2))) == "[-inf, 2]"
        assert Interval.unbounded().contains(10 ** 9)


@pytest.mark.unit
class TestFourierMotzkin:
    """Tests de la eliminación genérica"""

    def test_projection_with_box(self, ex49_system):
        """Test la proyección genérica coincide con IQ(2)"""
        projected = project_fourier_motzkin(ex49_system, EX49_BOX, 2)
        assert interval_of_rational_system(projected, 2, ()) == Interval(ext(-2), ext(2))

    def test_projection_without_box(self, ex49_system):
        """Test proyección sin caja"""
        projected = project_fourier_motzkin(ex49_system, None, 2)
        assert interval_of_rational_system(projected, 2, ()) == Interval(ext(-3), ext(3))

    def test_single_elimination(self):
        """Test eliminar p1 de p1 + p2 <= 1, -p1 <= 0"""
        system = RationalSystem.from_rows(2, [((1, 1), 1), ((-1, 0), 0)])
        projected = generic_fourier_motzkin(system, 1)
        assert projected.rows == (((Fraction(0), Fraction(1)), Fraction(1)),)

    def test_duplicates_keep_tightest(self):
        """Test filas paralelas se reducen a la más ajustada"""
        system = RationalSystem.from_rows(1, [((2,), 4), ((1,), 3)])
        assert system.rows == (((Fraction(1),), Fraction(2)),)

    def test_empty_by_elimination(self, ex49_system):
        """Test vacuidad con una caja disjunta"""
        far = IntegralBox((ext(10), MINUS_INF), (PLUS_INF, PLUS_INF))
        assert is_empty_by_elimination(ex49_system, far)
        assert not is_empty_by_elimination(ex49_system, EX49_BOX)


@pytest.mark.unit
class TestExtraction:
    """Tests de la retro-sustitución entera"""

    def test_ex49_with_box(self, ex49):
        """Test subgradiente (2, -2) en la caja"""
        result = extract_integral_subgradient(ex49, (0, 0), EX49_BOX)
        assert result.point == (2, -2)
        assert [step.level for step in result.steps] == [2, 1]
        assert result.steps[0].interval == Interval(ext(-2), ext(2))

    def test_empty_box(self, ex49):
        """Test caja disjunta de ∂f(0)"""
        far = IntegralBox((ext(10), ext(0)), (ext(12), ext(0)))
        result = extract_integral_subgradient(ex49, (0, 0), far)
        assert not result.found

    def test_r45_is_inconsistent(self, r45):
        """Test subdiferencial sin puntos enteros"""
        with pytest.raises(NotIntegrallyConvex):
            extract_integral_subgradient(r45, (0, 0, 0))
        assert not has_integral_subgradient(r45, (0, 0, 0))

    def test_r46_trivial_box(self, r46):
        """Test subgradiente entero con la caja trivial"""
        assert extract_integral_subgradient(r46, (0, 0, 0)).point == (0, 1, 0)

    def test_rounding(self, ex49, r46):
        """Test redondeo de un subgradiente racional"""
        assert rounding_box((Fraction(5, 2), -HALF)) == IntegralBox((2, -1), (3, 0))
        assert round_subgradient(ex49, (0, 0), (Fraction(5, 2), -HALF)) == (2, -1)
        assert round_subgradient(r46, (0, 0, 0), (HALF, HALF, HALF)) == (0, 0, 0)


@pytest.mark.unit
class TestVertices:
    """Tests de enumeración de vértices"""

    def test_r47(self, r47):
        """Test 14 vértices, 6 enteros"""
        vertices = enumerate_vertices(build_subgradient_system(r47, (0, 0, 0)))
        assert len(vertices) == 14
        assert sum(1 for v in vertices if is_integral_vertex(v)) == 6

    def test_r45_single_vertex(self, r45):
        """Test ∂f(0) es un único punto racional"""
        vertices = enumerate_vertices(build_subgradient_system(r45, (0, 0, 0)))
        assert vertices == ((HALF, HALF, HALF),)
        assert not is_integral_vertex(vertices[0])

    def test_unbounded(self):
        """Test sistema sin filas"""
        with pytest.raises(UnboundedRegion):
            enumerate_vertices(InequalitySystem(2))


@pytest.mark.unit
class TestAudits:
    """Tests de las auditorías de proyección"""

    def test_iq_against_generic(self, ex49):
        """Test IQ(ℓ) coincide con la proyección genérica"""
        audit = iq_projection_audit(ex49, (0, 0), EX49_BOX)
        assert audit.holds
        assert audit.checked > 0

    def test_reduced_against_generic(self, ex49_system):
        """Test sistema reducido contra Fourier-Motzkin"""
        assert reduced_system_audit(ex49_system).holds

    def test_random_box(self):
        """Test caja aleatoria de dimensión pedida"""
        box = random_integral_box(random.Random(1), 3)
        assert box.dimension == 3
