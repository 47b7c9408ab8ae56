"""
Álgebra lineal exacta sobre Fraction
"""
from fractions import Fraction
from typing import Optional, Sequence, Tuple


def solve_square_system(
    matrix: Sequence[Sequence], rhs: Sequence
) -> Optional[Tuple[Fraction, ...]]:
    """
    Resuelve M x = r por Gauss-Jordan

    Returns:
        La solución única, o None si M es singular
    """
    n = len(matrix)
    rows = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        piv = rows[col][col]
        rows[col] = [v / piv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return tuple(row[n] for row in rows)
