"""Exact arithmetic: fields, univariate polynomials, 3x3 matrices."""

from .fields import (
    QQ,
    CharacteristicError,
    ExtensionField,
    Field,
    PrimeField,
    RationalField,
    build_ext_field,
    first_irreducible,
    is_irreducible_small,
    is_prime,
    parse_field,
)
from .matrix3 import Matrix3, cayley_hamilton_residual, charpoly, kernel, nullspace, rank3, row_echelon
from .unipoly import UniPoly, gcd_monic, inverse_mod, irreducible_factors, roots

__all__ = [
    "QQ",
    "CharacteristicError",
    "ExtensionField",
    "Field",
    "PrimeField",
    "RationalField",
    "build_ext_field",
    "first_irreducible",
    "is_irreducible_small",
    "is_prime",
    "parse_field",
    "Matrix3",
    "cayley_hamilton_residual",
    "charpoly",
    "kernel",
    "nullspace",
    "rank3",
    "row_echelon",
    "UniPoly",
    "gcd_monic",
    "inverse_mod",
    "irreducible_factors",
    "roots",
]
