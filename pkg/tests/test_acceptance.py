"""
Tests de aceptación con semillas fijas sobre instancias generadas
"""
import random
from fractions import Fraction

import pytest

from src.config.settings import settings
from src.core.errors import EmptyIntersection, InfeasiblePrecondition
from src.core.extended import PLUS_INF, ext
from src.core.lattice import IntegralBox, is_integral
from src.modules.bisubmodular import (
    box_convolution,
    convolution_membership_audit,
    enumerate_integer_points,
    is_bisubmodular,
    minmax_cgk,
    minmax_fp,
    polyhedron_membership,
    sample_bisubmodular,
    signed_pairs,
)
from src.modules.fenchel import (
    continuous_minimum,
    fenchel_certificate,
    finiteness_propagation_check,
    in_argmax_of_table,
    in_argmin_of_separable,
    local_minimum_check,
    minimize_difference,
    verify_certificate,
    weak_duality_audit,
)
from src.modules.functions import (
    Orientation,
    SeparableFunction,
    biconjugate_check,
    generate_2_separable,
    generate_diagonally_dominant_quadratic,
    random_separable_concave,
)
from src.modules.functions.generators import random_convex_piece
from src.modules.integral_convexity import (
    envelope_sum_check,
    half_integer_cell_points,
    is_integrally_convex_function,
    sample_local_not_global,
    sample_table,
)
from src.modules.subdifferential import (
    build_subgradient_system,
    enumerate_vertices,
    has_integral_subgradient,
    iq_projection_audit,
    membership_check,
    random_integral_box,
    reduced_system_audit,
    round_subgradient,
    rounding_box,
)

GENERATORS = {
    "two_separable": generate_2_separable,
    "quadratic": generate_diagonally_dominant_quadratic,
}


def seeds(count):
    return [settings.DEFAULT_SEED + k for k in range(count)]


def seeded(seed):
    return random.Random(seed)


def generated(kind, seed, n, radius):
    """Tabla integralmente convexa y Psi separable cóncava de la misma semilla"""
    rng = seeded(seed)
    f = GENERATORS[kind](rng, n, IntegralBox.cube(n, radius))
    return f, random_separable_concave(rng, n)


def assert_certificate(f, psi):
    try:
        certificate = fenchel_certificate(f, psi)
    except EmptyIntersection:
        assert finiteness_propagation_check(f, psi).holds
        return
    x, p = certificate.primal_point, certificate.dual_point
    assert certificate.holds
    assert certificate.primal_value == certificate.dual_value
    assert in_argmax_of_table(f, p, x)
    assert in_argmin_of_separable(psi, p, x)
    assert verify_certificate(f, psi, certificate)


@pytest.mark.acceptance
class TestFenchelAcceptance:
    """Dualidad min = max sobre tablas generadas"""

    @pytest.mark.parametrize("seed", seeds(50))
    @pytest.mark.parametrize("n, radius", [(2, 2), (3, 1)])
    @pytest.mark.parametrize("kind", sorted(GENERATORS))
    def test_certificate(self, kind, n, radius, seed):
        """Test certificado verificable con ambas pertenencias"""
        f, psi = generated(kind, seed, n, radius)
        assert is_integrally_convex_function(f)
        assert_certificate(f, psi)

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", seeds(10))
    @pytest.mark.parametrize("kind", sorted(GENERATORS))
    def test_certificate_largest_box(self, kind, seed):
        """Test certificado en [-2, 2]^3"""
        assert_certificate(*generated(kind, seed, 3, 2))

    @pytest.mark.parametrize("seed", seeds(10))
    @pytest.mark.parametrize("kind", sorted(GENERATORS))
    def test_weak_duality(self, kind, seed):
        """Test Psi°(p) - f•(p) <= min(f - Psi) en [-2, 2]^2"""
        f, psi = generated(kind, seed, 2, 1)
        assert weak_duality_audit(f, psi, IntegralBox.cube(2, 2).points())
        assert finiteness_propagation_check(f, psi, radii=(1, 2, 3)).holds

    @pytest.mark.parametrize("seed", seeds(10))
    @pytest.mark.parametrize("kind", sorted(GENERATORS))
    def test_continuous_minimum(self, kind, seed):
        """Test min f - Psi sobre Z^2 coincide con el mínimo continuo"""
        f, psi = generated(kind, seed, 2, 2)
        try:
            expected = ext(minimize_difference(f, psi)[1])
        except EmptyIntersection:
            expected = PLUS_INF
        assert continuous_minimum(f, psi) == expected

    @pytest.mark.parametrize("seed", seeds(25))
    @pytest.mark.parametrize("n, radius", [(2, 2), (3, 1)])
    @pytest.mark.parametrize("kind", sorted(GENERATORS))
    def test_local_is_global(self, kind, n, radius, seed):
        """Test un mínimo local es global"""
        f, _ = generated(kind, seed, n, radius)
        minimum = min(f.entries.values())
        for x, value in f.items():
            assert local_minimum_check(f, x) == (value == minimum)

    def test_local_not_global_without_convexity(self):
        """Test sin convexidad integral hay mínimos locales que no son globales"""
        f, x = sample_local_not_global(seeded(settings.DEFAULT_SEED))
        assert local_minimum_check(f, x)
        assert f.entries[x] > min(f.entries.values())
        assert not is_integrally_convex_function(f)


@pytest.mark.acceptance
class TestConjugateAcceptance:
    """Biconjugada y suma de envolventes sobre tablas generadas"""

    @pytest.mark.parametrize("seed", seeds(25))
    @pytest.mark.parametrize("kind", sorted(GENERATORS))
    def test_biconjugate(self, kind, seed):
        """Test f•• = f en dom f"""
        f, _ = generated(kind, seed, 2, 1)
        result = biconjugate_check(f)
        assert result.holds, result.violating_point

    @pytest.mark.parametrize("seed", seeds(10))
    @pytest.mark.parametrize("kind", sorted(GENERATORS))
    def test_envelope_sum(self, kind, seed):
        """Test la extensión local de f + Phi es la suma de extensiones"""
        rng = seeded(seed)
        f = GENERATORS[kind](rng, 2, IntegralBox.cube(2, 1))
        phi = SeparableFunction(
            tuple(random_convex_piece(rng, -2, 2) for _ in range(2)), Orientation.CONVEX
        )
        assert envelope_sum_check(f, phi, half_integer_cell_points(f))


@pytest.mark.acceptance
class TestSubdifferentialAcceptance:
    """Proyecciones del subdiferencial y subgradientes enteros"""

    @pytest.mark.parametrize("seed", seeds(20))
    def test_iq_projection(self, seed):
        """Test IQ(ℓ) coincide con Fourier-Motzkin en cajas aleatorias, n = 2"""
        rng = seeded(seed)
        f = generate_2_separable(rng, 2)
        for x in f.domain:
            box = random_integral_box(rng, 2)
            audit = iq_projection_audit(f, x, box, radius=2)
            assert audit.holds, (x, box, audit)

    @pytest.mark.parametrize("seed", seeds(20))
    @pytest.mark.parametrize("kind", sorted(GENERATORS))
    def test_iq_projection_three_variables(self, kind, seed):
        """Test IQ(ℓ) en n = 3"""
        rng = seeded(seed)
        f = GENERATORS[kind](rng, 3, IntegralBox.cube(3, 1))
        x = f.domain[len(f) // 2]
        assert iq_projection_audit(f, x, random_integral_box(rng, 3), radius=1).holds

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", seeds(10))
    def test_iq_projection_four_variables(self, seed):
        """Test IQ(ℓ) en n = 4"""
        rng = seeded(seed)
        f = generate_diagonally_dominant_quadratic(rng, 4, IntegralBox.cube(4, 1))
        x = (0, 0, 0, 0)
        assert iq_projection_audit(f, x, random_integral_box(rng, 4), radius=1).holds

    @pytest.mark.parametrize("seed", seeds(6))
    def test_reduced_system(self, seed):
        """Test las cotas reducidas sin caja coinciden con la proyección"""
        f = generate_2_separable(seeded(seed), 2)
        for x in f.domain:
            assert reduced_system_audit(build_subgradient_system(f, x), radius=2).holds

    @pytest.mark.parametrize("seed", seeds(3))
    def test_sampled_tables(self, seed):
        """Test toda tabla integralmente convexa en una caja tiene subgradiente entero"""
        rng = seeded(seed)
        f = sample_table(rng, IntegralBox((0, 0), (1, 2)), value_range=(0, 3))
        assert all(has_integral_subgradient(f, x) for x in f.domain)

    @pytest.mark.parametrize("seed", seeds(25))
    @pytest.mark.parametrize("n", [2, 3])
    def test_rounding(self, n, seed):
        """Test redondeo de subgradientes racionales interiores a ∂f(0)"""
        f = generate_diagonally_dominant_quadratic(seeded(seed), n, IntegralBox.cube(n, 1))
        x = (0,) * n
        vertices = enumerate_vertices(build_subgradient_system(f, x))
        assert vertices
        midpoint = tuple(Fraction(a + b, 2) for a, b in zip(vertices[0], vertices[-1]))
        centroid = tuple(sum(column, Fraction(0)) / len(vertices) for column in zip(*vertices))
        for p in (midpoint, centroid):
            assert membership_check(f, x, p)
            q = round_subgradient(f, x, p)
            assert is_integral(q)
            assert rounding_box(p).contains(q)
            assert membership_check(f, x, q)


@pytest.mark.acceptance
class TestBisubmodularAcceptance:
    """Fórmulas min-max sobre funciones bisubmodulares muestreadas"""

    @pytest.mark.parametrize("seed", seeds(34))
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_minmax(self, n, seed):
        """Test ambos lados coinciden para todo A, B disjuntos con cotas en [-3, 3]"""
        rng = seeded(seed)
        f = sample_bisubmodular(rng, n)
        assert is_bisubmodular(f)
        alpha, beta = [-3] * n, [3] * n
        points = enumerate_integer_points(f, IntegralBox(tuple(alpha), tuple(beta)))
        if not points:
            with pytest.raises(InfeasiblePrecondition):
                minmax_fp(f, alpha, beta, (), (), points)
            return
        for A, B in signed_pairs(n):
            result = minmax_fp(f, alpha, beta, A, B, points)
            assert result.lhs == result.rhs
            assert polyhedron_membership(f, result.primal_witness)
        w = [rng.randint(0, 3) for _ in range(n)]
        try:
            result = minmax_cgk(f, w)
        except InfeasiblePrecondition:
            return
        assert result.lhs == result.rhs

    @pytest.mark.parametrize("seed", seeds(17))
    @pytest.mark.parametrize("n", [2, 3])
    def test_convolution(self, n, seed):
        """Test f ∘ w es bisubmodular y P(f ∘ w) = P(f) ∩ [alpha, beta]"""
        rng = seeded(seed)
        f = sample_bisubmodular(rng, n)
        alpha = [rng.randint(-2, 0) for _ in range(n)]
        beta = [a + rng.randint(0, 2) for a in alpha]
        try:
            convolution = box_convolution(f, alpha, beta)
        except InfeasiblePrecondition:
            return
        assert is_bisubmodular(convolution)
        samples = IntegralBox.cube(n, 3).points()
        assert convolution_membership_audit(f, alpha, beta, convolution, samples)
