"""Exact scalar, polynomial and bilinear-operator arithmetic."""

from .hirota import (
    KP_OPERATOR,
    MKP_OPERATOR,
    BilinearOp,
    D,
    GaugedFn,
    GaugeMismatchError,
    hirota_apply,
    hirota_apply_gauged,
    hirota_multi,
    hirota_power,
)
from .multivariate import MultiPoly, RationalFunction, ratfunc_equal
from .numbers import Rational, fmt_rational, parse_rational
from .univariate import (
    ONE,
    X,
    ZERO,
    NonDivisibleError,
    UniPoly,
    UniRatFunc,
    exact_divide,
    poly_derivative,
    poly_gcd,
)

__all__ = [
    "BilinearOp",
    "D",
    "GaugedFn",
    "GaugeMismatchError",
    "KP_OPERATOR",
    "MKP_OPERATOR",
    "MultiPoly",
    "NonDivisibleError",
    "ONE",
    "Rational",
    "RationalFunction",
    "UniPoly",
    "UniRatFunc",
    "X",
    "ZERO",
    "exact_divide",
    "fmt_rational",
    "hirota_apply",
    "hirota_apply_gauged",
    "hirota_multi",
    "hirota_power",
    "parse_rational",
    "poly_derivative",
    "poly_gcd",
    "ratfunc_equal",
]
