"""Exact computation over small finite fields: field towers from fixed
irreducibles, sparse multivariate polynomials under graded reverse
lexicographic order, Buchberger's algorithm, staircase dimension, and
brute-force point counting with an evaluation budget.
"""
from .gf import FieldElement, FiniteField, finite_field
from .poly import Poly, parse_poly
from .groebner import (
    groebner_basis,
    ideal_dimension,
    ideal_membership,
    normal_form,
    s_polynomial,
)
from .counting import affine_point_count, projective_point_count, projective_block_points

__all__ = [
    "FieldElement",
    "FiniteField",
    "finite_field",
    "Poly",
    "parse_poly",
    "groebner_basis",
    "ideal_dimension",
    "ideal_membership",
    "normal_form",
    "s_polynomial",
    "affine_point_count",
    "projective_point_count",
    "projective_block_points",
]
