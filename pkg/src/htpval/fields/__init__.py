"""Exact arithmetic tower: rationals, polynomials, rational functions,
truncated Laurent series, the biquadratic extension, and Hensel lifting."""

from fractions import Fraction

from .base import Status, is_nonzero, is_zero, rational_sqrt, status, to_fraction
from .biquadratic import BiquadraticElement, BiquadraticTower, tower_conjugate
from .hensel import hensel_lift_root, sqrt_lift
from .laurent import INF, TruncatedLaurent
from .polynomial import Polynomial, poly_divmod, poly_gcd
from .ratfunc import INFINITY, RationalFunction, order_at, value_at_infinity

Rational = Fraction

__all__ = [
    "BiquadraticElement",
    "BiquadraticTower",
    "Fraction",
    "INF",
    "INFINITY",
    "Polynomial",
    "Rational",
    "RationalFunction",
    "Status",
    "TruncatedLaurent",
    "hensel_lift_root",
    "is_nonzero",
    "is_zero",
    "order_at",
    "poly_divmod",
    "poly_gcd",
    "rational_sqrt",
    "sqrt_lift",
    "status",
    "to_fraction",
    "tower_conjugate",
    "value_at_infinity",
]
