"""Exact rational, polynomial and rational-function arithmetic."""

from fractions import Fraction as BigRational

from ._dense import InexactDivision
from .partfrac import (
    LinearPole,
    PartialFractionT,
    PartialFractionV,
    binomial_series_coeff,
    partial_fractions_t,
    partial_fractions_v,
)
from .poly import DomainError, Poly, format_rational, parse_rational, poly_exact_div, poly_gcd
from .ratfunc import ConsistencyError, FactorizationError, RatFunc, exact_quotient, normalize, substitute

__all__ = [
    "BigRational",
    "ConsistencyError",
    "DomainError",
    "FactorizationError",
    "InexactDivision",
    "LinearPole",
    "PartialFractionT",
    "PartialFractionV",
    "Poly",
    "RatFunc",
    "binomial_series_coeff",
    "exact_quotient",
    "format_rational",
    "normalize",
    "parse_rational",
    "partial_fractions_t",
    "partial_fractions_v",
    "poly_exact_div",
    "poly_gcd",
    "substitute",
]
