"""Orthogonal polynomials for Jacobi-type weights with a jump at the origin."""

from .errors import ConvergenceError, DomainError, OrthogonalityError
from .kernels import BACKEND
from .quadrature import QuadratureRule, WeightSpec, composite_rule, gauss_jacobi, integrate_wc

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConvergenceError",
    "DomainError",
    "OrthogonalityError",
    "QuadratureRule",
    "WeightSpec",
    "composite_rule",
    "gauss_jacobi",
    "integrate_wc",
]
