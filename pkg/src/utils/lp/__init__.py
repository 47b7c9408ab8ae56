"""
Programación lineal exacta
"""
from src.utils.lp.simplex import LPResult, LPStatus, is_feasible, solve_linear_program

__all__ = ["LPResult", "LPStatus", "is_feasible", "solve_linear_program"]
