"""
Representaciones de funciones enteras en Z^n y sus conjugadas
"""
from src.modules.functions.conjugates import (
    BiconjugateResult,
    abs_form_conjugate,
    biconjugate_check,
    brute_force_univariate_conjugate,
    concave_conjugate,
    concave_conjugate_separable,
    conjugate_table_on_box,
    convex_conjugate,
    convex_conjugate_separable,
    integral_conjugate_table,
    piece_concave_conjugate,
    piece_convex_conjugate,
    quad_form_conjugate,
)
from src.modules.functions.generators import (
    TwoSeparableSpec,
    generate_2_separable,
    generate_diagonally_dominant_quadratic,
    random_separable_concave,
)
from src.modules.functions.model import (
    Orientation,
    TableFunction,
    add_tables,
    evaluate,
    indicator_table,
    tabulate,
)
from src.modules.functions.separable import (
    SeparableFunction,
    Shape,
    UnivariatePiece,
    subdifferential_box_of_separable,
    univariate_slopes,
)

__all__ = [
    "BiconjugateResult",
    "abs_form_conjugate",
    "biconjugate_check",
    "brute_force_univariate_conjugate",
    "concave_conjugate",
    "concave_conjugate_separable",
    "conjugate_table_on_box",
    "convex_conjugate",
    "convex_conjugate_separable",
    "integral_conjugate_table",
    "piece_concave_conjugate",
    "piece_convex_conjugate",
    "quad_form_conjugate",
    "TwoSeparableSpec",
    "generate_2_separable",
    "generate_diagonally_dominant_quadratic",
    "random_separable_concave",
    "Orientation",
    "TableFunction",
    "add_tables",
    "evaluate",
    "indicator_table",
    "tabulate",
    "SeparableFunction",
    "Shape",
    "UnivariatePiece",
    "subdifferential_box_of_separable",
    "univariate_slopes",
]
