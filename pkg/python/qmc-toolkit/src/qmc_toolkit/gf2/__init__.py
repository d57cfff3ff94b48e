from .matrix import (
    expansion_matrix,
    gf2_matmul,
    gf2_rank,
    hankel_columns,
    is_invertible_top,
    rank_gf2,
    stacked_rank,
)
from .polynomial import (
    default_modulus,
    is_irreducible,
    is_primitive,
    poly_divmod,
    poly_gcd,
    poly_mul_mod,
    primitive_polynomials,
    unit_group_elements,
    unit_group_generator,
)
from .types import (
    MAX_DEGREE,
    MAX_DIGITS,
    MINUS_INFINITY,
    BinaryPolynomial,
    GeneratingMatrix,
    Gf2Error,
)

__all__ = [
    "BinaryPolynomial",
    "GeneratingMatrix",
    "Gf2Error",
    "MAX_DEGREE",
    "MAX_DIGITS",
    "MINUS_INFINITY",
    "default_modulus",
    "expansion_matrix",
    "gf2_matmul",
    "gf2_rank",
    "hankel_columns",
    "is_invertible_top",
    "is_irreducible",
    "is_primitive",
    "poly_divmod",
    "poly_gcd",
    "poly_mul_mod",
    "primitive_polynomials",
    "rank_gf2",
    "stacked_rank",
    "unit_group_elements",
    "unit_group_generator",
]
