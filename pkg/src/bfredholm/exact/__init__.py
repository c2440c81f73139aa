"""Exact arithmetic core: Gaussian-rational scalars, matrices, polynomials,
multivariate polynomials, extension fields and algebraic point sets."""

from .gaussian import GR, GaussianRational
from .matrix import (
    ExactMatrix,
    LinearSolution,
    apply_poly,
    char_poly,
    determinant,
    inverse,
    minimal_polynomial,
    nullspace,
    rank,
    solve_linear,
)
from .poly import ExactPolynomial, bezout, poly_gcd, poly_xgcd, split_at_zero
from .multipoly import MultiPoly, apply_univariate, det_over_ring
from .extension import ExtensionField, ExtScalar, ext_matrix_det
from .points import AlgebraicPointSet, factor_gaussian, gaussian_roots

__all__ = [
    "GR",
    "GaussianRational",
    "ExactMatrix",
    "LinearSolution",
    "apply_poly",
    "char_poly",
    "determinant",
    "inverse",
    "minimal_polynomial",
    "nullspace",
    "rank",
    "solve_linear",
    "ExactPolynomial",
    "bezout",
    "poly_gcd",
    "poly_xgcd",
    "split_at_zero",
    "MultiPoly",
    "apply_univariate",
    "det_over_ring",
    "ExtensionField",
    "ExtScalar",
    "ext_matrix_det",
    "AlgebraicPointSet",
    "factor_gaussian",
    "gaussian_roots",
]
