"""
Lie-level and numeric checks: the 2x2 algebras A, B, C, generators of
SO(n_1, ..., n_m) with exact bracket closure, monomial factorisation and the
O1 T O2 factorisation of unitaries.
"""

from .algebras import (
    AlgebraKind,
    TwoByTwo,
    algebra_add,
    algebra_det,
    algebra_inverse,
    algebra_mul,
    det_kernel_member,
    hyperbolic_point,
    pythagorean_point,
)
from .matrices import EchelonSpan, RationalMatrix, bracket, rank
from .closure import (
    LieBasis,
    bracket_closure,
    closure_report,
    generator_set,
    is_bracket_closed,
    one_parameter,
    p_formula,
    so11_generator,
    so2_generator,
)
from .monomial import factor_monomial, random_monomial, reconstruct_monomial
from .unitary import (
    DecompositionResult,
    odo_decompose,
    principal_half_angle,
    random_unitary,
    semipolar,
)

__all__ = [
    "AlgebraKind", "TwoByTwo", "algebra_add", "algebra_det", "algebra_inverse", "algebra_mul",
    "det_kernel_member", "hyperbolic_point", "pythagorean_point",
    "EchelonSpan", "RationalMatrix", "bracket", "rank",
    "LieBasis", "bracket_closure", "closure_report", "generator_set", "is_bracket_closed",
    "one_parameter", "p_formula", "so11_generator", "so2_generator",
    "factor_monomial", "random_monomial", "reconstruct_monomial",
    "DecompositionResult", "odo_decompose", "principal_half_angle", "random_unitary", "semipolar",
]
