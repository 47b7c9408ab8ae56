"""
Tests para tablas, funciones separables y conjugadas
"""
import pytest

from src.core.errors import InvalidFunction, PointOutsideDomain
from src.core.extended import MINUS_INF, PLUS_INF, ext
from src.core.lattice import IntegralBox
from src.modules.functions import (
    Orientation,
    SeparableFunction,
    TableFunction,
    UnivariatePiece,
    abs_form_conjugate,
    add_tables,
    biconjugate_check,
    brute_force_univariate_conjugate,
    concave_conjugate,
    conjugate_table_on_box,
    convex_conjugate,
    generate_2_separable,
    generate_diagonally_dominant_quadratic,
    integral_conjugate_table,
    piece_convex_conjugate,
    quad_form_conjugate,
    random_separable_concave,
    subdifferential_box_of_separable,
    tabulate,
    univariate_slopes,
)
from src.modules.integral_convexity import is_integrally_convex_function

CONCAVE = Orientation.CONCAVE


@pytest.mark.unit
class TestTableFunction:
    """Tests básicos de TableFunction"""

    def test_outside_domain_is_infinite(self, ex49):
        """Test fuera del dominio vale +inf"""
        assert ex49.evaluate((2, 0)) == PLUS_INF
        assert ex49.negated().evaluate((2, 0)) == MINUS_INF

    def test_value_outside_domain(self, ex49):
        """Test value() fuera del dominio"""
        with pytest.raises(PointOutsideDomain):
            ex49.value((5, 5))

    def test_entries_sorted(self, ex49):
        """Test el dominio queda en orden lexicográfico"""
        assert ex49.domain == tuple(sorted(ex49.domain))
        assert len(ex49) == 9

    def test_rejects_non_integer_values(self):
        """Test valores no enteros"""
        with pytest.raises(InvalidFunction):
            TableFunction(1, {(0,): 1.5})

    def test_rejects_empty_domain(self):
        """Test dominio vacío"""
        with pytest.raises(InvalidFunction):
            TableFunction(1, {})

    def test_add_tables(self, ex49, psi_l1):
        """Test f + g sobre la intersección de dominios"""
        total = add_tables(ex49, psi_l1)
        assert total.value((1, 1)) == 2
        assert total.value((0, 0)) == 0


@pytest.mark.unit
class TestSeparable:
    """Tests de piezas univariadas y funciones separables"""

    def test_concave_abs_form(self):
        """Test -alpha|k - k0| en orientación cóncava"""
        piece = UnivariatePiece.abs_form(2, 1, CONCAVE)
        assert piece.evaluate(3) == ext(-4)

    def test_kinked_form(self):
        """Test pendientes distintas a cada lado del quiebre"""
        piece = UnivariatePiece.kinked_form(1, 3, 1, CONCAVE)
        assert piece.evaluate(2) == ext(1)
        assert piece.evaluate(0) == ext(-3)

    def test_kinked_concavity(self):
        """Test kinked cóncava con left < right"""
        with pytest.raises(InvalidFunction):
            UnivariatePiece.kinked_form(0, 1, 3, CONCAVE)

    def test_breakpoints_convexity(self):
        """Test una tabla no convexa se rechaza"""
        with pytest.raises(InvalidFunction):
            UnivariatePiece.breakpoints(0, [0, 2, 1])

    def test_breakpoints_domain(self):
        """Test fuera del intervalo de la tabla"""
        piece = UnivariatePiece.breakpoints(-1, [1, 0, 1])
        assert piece.evaluate(2) == PLUS_INF
        assert piece.evaluate(-1) == ext(1)

    def test_univariate_slopes(self):
        """Test subdiferencial de una pieza convexa"""
        piece = UnivariatePiece.breakpoints(0, [0, 1, 3])
        assert univariate_slopes(piece, 1) == (ext(1), ext(2))
        assert univariate_slopes(piece, 0) == (MINUS_INF, ext(1))

    def test_subdifferential_box(self, psi_l1):
        """Test -∂Phi(0) para Phi = |x1| + |x2|"""
        box = subdifferential_box_of_separable(psi_l1.negated(), (0, 0))
        assert box == IntegralBox.cube(2, 1)

    def test_subdifferential_box_outside(self):
        """Test punto fuera de dom Phi"""
        phi = SeparableFunction((UnivariatePiece.breakpoints(0, [0, 1]),), Orientation.CONVEX)
        with pytest.raises(PointOutsideDomain):
            subdifferential_box_of_separable(phi, (5,))

    def test_random_separable_contains_origin(self):
        """Test 0 ∈ dom Psi para Psi aleatoria"""
        for seed in range(20):
            psi = random_separable_concave(seed, 3)
            assert psi.in_domain((0, 0, 0))


@pytest.mark.unit
class TestConjugates:
    """Tests de conjugadas enteras"""

    def test_abs_form_conjugate(self):
        """Test conjugada de alpha|k - k0|"""
        assert abs_form_conjugate(1, 2, 3) == ext(3)
        assert abs_form_conjugate(3, 2, 0) == PLUS_INF

    @pytest.mark.parametrize("ell", range(-4, 5))
    def test_quad_form_against_enumeration(self, ell):
        """Test forma cerrada de beta(k - k0)^2 contra enumeración"""
        piece = UnivariatePiece.quad_form(2, 1)
        assert quad_form_conjugate(ell, 2, 1) == brute_force_univariate_conjugate(piece, ell, 10)

    @pytest.mark.parametrize("ell", range(-2, 3))
    def test_bounded_abs_form(self, ell):
        """Test abs_form con dominio acotado contra enumeración"""
        piece = UnivariatePiece.abs_form(1, 0, lower=ext(-2), upper=ext(3))
        assert piece_convex_conjugate(piece, ell) == brute_force_univariate_conjugate(
            piece, ell, 5
        )

    def test_table_conjugate(self, ex49):
        """Test f•(0) = -min f"""
        assert integral_conjugate_table(ex49, (0, 0)) == 0
        assert integral_conjugate_table(ex49, (2, -2)) == 0

    def test_linear_zero_conjugate(self):
        """Test Psi = 0 tiene Psi°(0) = 0 y -inf fuera de 0"""
        piece = UnivariatePiece.linear_form(0, CONCAVE)
        psi = SeparableFunction((piece, piece), CONCAVE)
        assert concave_conjugate(psi, (0, 0)) == ext(0)
        assert concave_conjugate(psi, (1, 0)) == MINUS_INF

    def test_truncated_conjugate(self, e35):
        """Test conjugada de una ventana truncada"""
        f, _ = e35
        assert convex_conjugate(f, (0, 0)) == ext(0)
        assert convex_conjugate(f, (1, 1)) == ext(1)
        assert convex_conjugate(f, (2, 2)) == PLUS_INF
        assert convex_conjugate(f, (1, 0)) == PLUS_INF

    def test_conjugate_table_on_box(self, ex49):
        """Test tabla de f• en una caja"""
        table = conjugate_table_on_box(ex49, IntegralBox.cube(2, 1))
        assert len(table) == 9
        assert table.value((0, 0)) == 0

    def test_biconjugate_integrally_convex(self, ex49):
        """Test f•• = f para una función integralmente convexa"""
        result = biconjugate_check(ex49)
        assert result.holds
        assert result.radius == 8

    def test_biconjugate_failure(self):
        """Test f•• < f en un punto no convexo"""
        f = TableFunction(1, {(0,): 0, (1,): 2, (2,): 0})
        result = biconjugate_check(f)
        assert not result.holds
        assert result.violating_point == (1,)


@pytest.mark.unit
class TestGenerators:
    """Tests de los generadores de funciones"""

    @pytest.mark.parametrize("seed", range(5))
    def test_two_separable_is_integrally_convex(self, seed):
        """Test una función 2-separable convexa es integralmente convexa"""
        assert is_integrally_convex_function(generate_2_separable(seed, 2))

    def test_two_separable_reproducible(self):
        """Test misma semilla, misma tabla"""
        assert generate_2_separable(3, 2) == generate_2_separable(3, 2)

    def test_diagonally_dominant_quadratic(self):
        """Test forma cuadrática diagonalmente dominante"""
        f = generate_diagonally_dominant_quadratic(1, 2)
        assert f.value((0, 0)) == 0
        assert is_integrally_convex_function(f)

    def test_tabulate_drops_infinite(self):
        """Test tabulate omite valores infinitos"""
        phi = SeparableFunction((UnivariatePiece.breakpoints(0, [0, 1]),), Orientation.CONVEX)
        table = tabulate(phi, [(0,), (1,), (2,)])
        assert table.domain == ((0,), (1,))
