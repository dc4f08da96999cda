"""Threefold-symmetric Hahn-classical 2-orthogonal polynomials.

Exact recurrence data, polynomials, moments and the third-order ODE in
rational arithmetic; zeros on the 3-star and the orthogonality weights in
double precision.
"""

from .errors import (ConvergenceError, DegenerateParameterError, DomainError, InsufficientTableError,
                     PochhammerZeroError, RecurrenceMismatchError, StarpolyError, SymmetryViolationError)
from .moments import MomentTable, moment_table, verify_orthogonality
from .polynomials import SymmetricPolynomial, generate
from .recurrence import Case, FamilyParams, gamma, gamma_tilde, theta, validate_params
from .weights import WeightSpec, quadrature_moment, star_weight, weight
from .zeros import ZeroSet, check_interlacing, largest_zero_bound, positive_zeros

__version__ = "0.1.0"

__all__ = [
    "Case", "FamilyParams", "gamma", "gamma_tilde", "theta", "validate_params",
    "SymmetricPolynomial", "generate", "MomentTable", "moment_table", "verify_orthogonality",
    "WeightSpec", "weight", "star_weight", "quadrature_moment",
    "ZeroSet", "positive_zeros", "check_interlacing", "largest_zero_bound",
    "StarpolyError", "DegenerateParameterError", "RecurrenceMismatchError", "SymmetryViolationError",
    "PochhammerZeroError", "InsufficientTableError", "ConvergenceError", "DomainError",
]
