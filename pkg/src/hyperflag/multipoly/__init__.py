"""Homogeneous forms in X, Y, Z, the minor ideal and its Groebner-basis oracle."""

from .groebner import (
    DegreeCapExceeded,
    groebner,
    hilbert_function,
    ideal_dimension_in_degree,
    in_ideal,
    normal_form,
)
from .homog import HomPoly, coefficient_rank, monomials, normalize_linear
from .minors import MinorTriple, common_linear_factor, minors_ideal, variables
from .oracle import IdealOracleReport, deduce_type, oracle_classify
from .points import OrbitCounter, count_conic_zeros, count_points_over, orbit_counter, rational_points

__all__ = [
    "DegreeCapExceeded",
    "groebner",
    "hilbert_function",
    "ideal_dimension_in_degree",
    "in_ideal",
    "normal_form",
    "HomPoly",
    "coefficient_rank",
    "monomials",
    "normalize_linear",
    "MinorTriple",
    "common_linear_factor",
    "minors_ideal",
    "variables",
    "IdealOracleReport",
    "deduce_type",
    "oracle_classify",
    "OrbitCounter",
    "count_conic_zeros",
    "count_points_over",
    "orbit_counter",
    "rational_points",
]
