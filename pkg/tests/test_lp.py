"""
Tests para el simplex exacto y el álgebra lineal
"""
from fractions import Fraction

import pytest

from src.utils.linalg import solve_square_system
from src.utils.lp import LPStatus, is_feasible, solve_linear_program


@pytest.mark.unit
class TestSimplex:
    """Tests del simplex en dos fases con regla de Bland"""

    def test_simple_minimum(self):
        """Test min x + y con x + y >= 1"""
        result = solve_linear_program([1, 1], A_ub=[[-1, -1]], b_ub=[-1])
        assert result.status is LPStatus.OPTIMAL
        assert result.value == 1

    def test_rational_optimum(self):
        """Test óptimo racional exacto"""
        result = solve_linear_program([-1, -1], A_ub=[[2, 1], [1, 2]], b_ub=[1, 1])
        assert result.value == Fraction(-2, 3)
        assert result.solution == (Fraction(1, 3), Fraction(1, 3))

    def test_maximize(self):
        """Test maximización"""
        result = solve_linear_program([1], A_ub=[[1]], b_ub=[5], maximize=True)
        assert result.value == 5

    def test_infeasible(self):
        """Test sistema infactible"""
        result = solve_linear_program([0], A_eq=[[1]], b_eq=[-1])
        assert result.status is LPStatus.INFEASIBLE

    def test_unbounded(self):
        """Test objetivo no acotado"""
        result = solve_linear_program([-1], A_ub=[[-1]], b_ub=[0])
        assert result.status is LPStatus.UNBOUNDED

    def test_free_variable(self):
        """Test variable libre negativa"""
        result = solve_linear_program([1], A_ub=[[-1]], b_ub=[3], free=[0])
        assert result.value == -3
        assert result.solution == (Fraction(-3),)

    def test_is_feasible(self):
        """Test factibilidad con igualdades"""
        assert is_feasible([[1, 1], [1, 0]], [Fraction(1), Fraction(1, 2)], n=2)
        assert not is_feasible([[1, 1]], [-1], n=2)


@pytest.mark.unit
class TestSquareSystem:
    """Tests de Gauss-Jordan sobre Fraction"""

    def test_unique_solution(self):
        """Test solución única"""
        assert solve_square_system([[1, 1], [1, -1]], [1, 0]) == (Fraction(1, 2), Fraction(1, 2))

    def test_singular(self):
        """Test matriz singular"""
        assert solve_square_system([[1, 1], [2, 2]], [1, 2]) is None
