"""
Tests para funciones bisubmodulares y sus fórmulas min-max
"""
import pytest

from src.core.errors import InfeasiblePrecondition, InvalidFunction
from src.core.extended import ext
from src.core.lattice import IntegralBox
from src.modules.bisubmodular import (
    BisubFunction,
    box_convolution,
    box_function,
    build_psi_from_signed_pair,
    convolution_membership_audit,
    enumerate_integer_points,
    from_vector,
    is_bisubmodular,
    minmax_cgk,
    minmax_fp,
    polyhedron_membership,
    sample_bisubmodular,
    signed_box_correction,
    signed_pairs,
    to_vector,
)
from src.modules.bisubmodular.model import EMPTY, format_pair, join, meet

ONE = frozenset({0})
NONE = frozenset()


@pytest.fixture
def bisub_n1():
    """f({1}, ∅) = 2, f(∅, {1}) = 1"""
    return BisubFunction(1, {EMPTY: 0, (ONE, NONE): 2, (NONE, ONE): 1})


@pytest.mark.unit
class TestSignedPairs:
    """Tests de la enumeración de 3^N"""

    def test_count_and_first(self):
        """Test 3^n pares comenzando por (∅, ∅)"""
        pairs = signed_pairs(2)
        assert len(pairs) == 9
        assert pairs[0] == EMPTY

    def test_vector_identification(self):
        """Test (X, Y) <-> e_X - e_Y"""
        pair = from_vector((1, 0, -1))
        assert pair == (frozenset({0}), frozenset({2}))
        assert to_vector(pair, 3) == (1, 0, -1)

    def test_meet_and_join(self):
        """Test operaciones de retículo"""
        a, b = (frozenset({0}), frozenset({1})), (frozenset({1}), frozenset({0}))
        assert meet(a, b) == EMPTY
        assert join(a, b) == EMPTY
        assert format_pair(a) == "({1}, {2})"


@pytest.mark.unit
class TestBisubFunction:
    """Tests básicos de BisubFunction"""

    def test_missing_pair(self):
        """Test tabla incompleta"""
        with pytest.raises(InvalidFunction):
            BisubFunction(1, {EMPTY: 0, (ONE, NONE): 2})

    def test_nonzero_at_empty(self):
        """Test f(∅, ∅) != 0"""
        with pytest.raises(InvalidFunction):
            BisubFunction(1, {EMPTY: 1, (ONE, NONE): 2, (NONE, ONE): 1})

    def test_not_bisubmodular(self):
        """Test f = 0 salvo f({1}, {2}) = -1"""
        values = {pair: 0 for pair in signed_pairs(2)}
        values[(frozenset({0}), frozenset({1}))] = -1
        f = BisubFunction(2, values)
        result = is_bisubmodular(f)
        assert not result
        a, b = result.violation
        assert f.values[a] + f.values[b] < f.values[meet(a, b)] + f.values[join(a, b)]

    def test_box_function_is_bisubmodular(self):
        """Test w(X, Y) = beta(X) - alpha(Y)"""
        w = box_function([-1, 0], [2, 1])
        assert is_bisubmodular(w)
        assert w(ONE, NONE) == 2
        assert w(NONE, ONE) == 1

    def test_polyhedron(self, bisub_n1):
        """Test puntos enteros de P(f)"""
        assert enumerate_integer_points(bisub_n1) == ((-1,), (0,), (1,), (2,))
        assert not polyhedron_membership(bisub_n1, (3,))

    def test_polyhedron_in_box(self, bisub_n1):
        """Test P(f) intersectado con una caja"""
        assert enumerate_integer_points(bisub_n1, IntegralBox((1,), (5,))) == ((1,), (2,))
        assert enumerate_integer_points(bisub_n1, IntegralBox((3,), (4,))) == ()

    def test_cgk_bound_below_polyhedron(self, bisub_n1):
        """Test w por debajo de -f(∅, {1})"""
        with pytest.raises(InfeasiblePrecondition):
            minmax_cgk(bisub_n1, [-2])

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_sampler(self, rng, n):
        """Test el muestreador devuelve funciones bisubmodulares"""
        assert is_bisubmodular(sample_bisubmodular(rng, n))


@pytest.mark.unit
class TestMinMax:
    """Tests de las fórmulas min-max"""

    def test_cgk(self, bisub_n1):
        """Test w = 5: ambos lados valen 2"""
        result = minmax_cgk(bisub_n1, [5])
        assert result.lhs == result.rhs == 2
        assert result.primal_witness == (2,)
        assert result.dual_witness == (ONE, NONE)

    def test_cgk_infeasible(self, bisub_n1):
        """Test ningún z <= w en P(f)"""
        with pytest.raises(InfeasiblePrecondition):
            minmax_cgk(bisub_n1, [-2])

    def test_fp_empty_signs(self, bisub_n1):
        """Test A = B = ∅"""
        result = minmax_fp(bisub_n1, [-5], [5], [], [])
        assert result.lhs == result.rhs == 0

    def test_fp_positive_part(self, bisub_n1):
        """Test A = {1}"""
        result = minmax_fp(bisub_n1, [-5], [5], [0], [])
        assert result.lhs == result.rhs == 2

    def test_fp_preconditions(self, bisub_n1):
        """Test A ∩ B != ∅ y alpha > beta"""
        with pytest.raises(InfeasiblePrecondition):
            minmax_fp(bisub_n1, [-5], [5], [0], [0])
        with pytest.raises(InfeasiblePrecondition):
            minmax_fp(bisub_n1, [1], [0], [], [])

    def test_fp_on_sampled(self, rng):
        """Test min = max sobre una función aleatoria con todos los (A, B)"""
        f = sample_bisubmodular(rng, 2)
        alpha, beta = [-3, -3], [3, 3]
        for A, B in signed_pairs(2):
            result = minmax_fp(f, alpha, beta, A, B)
            assert result.lhs == result.rhs


@pytest.mark.unit
class TestConvolution:
    """Tests de la convolución con una caja"""

    def test_huge_box(self, bisub_n1):
        """Test una caja enorme no cambia la función"""
        assert box_convolution(bisub_n1, [-100], [100]) == bisub_n1

    def test_small_box(self, bisub_n1):
        """Test P(f ∘ w) = P(f) ∩ [0, 1]"""
        convolution = box_convolution(bisub_n1, [0], [1])
        assert convolution(ONE, NONE) == 1
        assert convolution(NONE, ONE) == 0
        samples = [(k,) for k in range(-2, 4)]
        assert convolution_membership_audit(bisub_n1, [0], [1], convolution, samples)

    def test_disjoint_box(self, bisub_n1):
        """Test P(f) no intersecta la caja"""
        with pytest.raises(InfeasiblePrecondition):
            box_convolution(bisub_n1, [3], [4])


@pytest.mark.unit
class TestSeparableFromSignedPair:
    """Tests de Psi construida desde (A, B)"""

    def test_values(self):
        """Test psi_i para i ∈ A con alpha = 1, beta = 3"""
        psi = build_psi_from_signed_pair([0], [], [1], [3], 1)
        assert psi.evaluate((2,)) == ext(1)
        assert psi.evaluate((0,)) == ext(-3)

    def test_matches_box_correction(self):
        """Test -Psi(e_X - e_Y) coincide con la corrección de caja"""
        alpha, beta = [-1, 0], [2, 1]
        A, B = {0}, {1}
        psi = build_psi_from_signed_pair(A, B, alpha, beta, 2)
        for pair in signed_pairs(2):
            value = -psi.evaluate(to_vector(pair, 2))
            assert value == ext(signed_box_correction(pair, alpha, beta, A, B))
