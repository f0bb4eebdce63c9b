"""Hirota bilinear operators on polynomials, plain and gauge-aware."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from numbers import Rational as _RationalABC
from typing import Mapping

from .multivariate import MultiPoly
from .univariate import X, ZERO, UniPoly, exact_divide


class GaugeMismatchError(ValueError):
    """Gauged operands (or operator) are outside what the Leibniz rules cover."""


def _as_poly(c) -> UniPoly:
    return c if isinstance(c, UniPoly) else UniPoly.const(c)


class BilinearOp:
    """Operator ``sum_k c_k(x) D_x^k`` with polynomial coefficients.

    Build with :func:`D` and ordinary arithmetic, e.g.
    ``D(2) - X * D(1) + Fraction(1, 3)``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        self.terms: dict[int, UniPoly] = {}
        for k, c in (terms or {}).items():
            if k < 0:
                raise ValueError("negative power of D_x")
            c = _as_poly(c)
            if not c.is_zero():
                self.terms[k] = self.terms.get(k, ZERO) + c
        self.terms = {k: c for k, c in self.terms.items() if not c.is_zero()}

    @property
    def order(self) -> int:
        return max(self.terms, default=-1)

    @staticmethod
    def _coerce(other):
        if isinstance(other, BilinearOp):
            return other
        if isinstance(other, (int, _RationalABC, UniPoly)):
            return BilinearOp({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        merged = dict(self.terms)
        for k, c in o.terms.items():
            merged[k] = merged.get(k, ZERO) + c
        return BilinearOp(merged)

    __radd__ = __add__

    def __neg__(self):
        return BilinearOp({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, c):
        if isinstance(c, (int, _RationalABC, UniPoly)):
            return BilinearOp({k: v * c for k, v in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        return o is not None and self.terms == o.terms

    def __repr__(self):
        parts = [f"({c})*D^{k}" for k, c in sorted(self.terms.items(), reverse=True)]
        return "BilinearOp(" + " + ".join(parts or ["0"]) + ")"


def D(k: int = 1) -> BilinearOp:
    """The Hirota operator ``D_x^k``."""
    return BilinearOp({k: 1})


def hirota_power(k: int, F: UniPoly, G: UniPoly) -> UniPoly:
    """``D_x^k F.G = sum_j (-1)^j C(k,j) F^(k-j) G^(j)``."""
    acc = ZERO
    for j in range(k + 1):
        term = F.derivative(k - j) * G.derivative(j)
        if term:
            c = comb(k, j)
            acc = acc + (term * (-c if j % 2 else c))
    return acc


def hirota_apply(P: BilinearOp, F: UniPoly, G: UniPoly) -> UniPoly:
    """Evaluate ``P(D_x) F.G`` exactly."""
    acc = ZERO
    for k, c in P.terms.items():
        acc = acc + c * hirota_power(k, F, G)
    return acc


@dataclass(frozen=True)
class GaugedFn:
    """``exp(-eps*x**4/12 + a*x**2/2) * u(x)``.

    ``eps`` counts factors of ``exp(-x^4/12)``: 1 for a single tau-function of
    the Hermite family, 2 for a product of two of them, and so on.
    """

    eps: int
    a: Fraction
    u: UniPoly

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        if not isinstance(self.u, UniPoly):
            object.__setattr__(self, "u", _as_poly(self.u))
        if self.eps < 0:
            raise ValueError("negative quartic gauge multiplicity")

    @classmethod
    def plain(cls, u) -> "GaugedFn":
        return cls(0, Fraction(0), _as_poly(u))

    @classmethod
    def zero(cls) -> "GaugedFn":
        return cls(0, Fraction(0), ZERO)

    def is_zero(self) -> bool:
        return self.u.is_zero()

    def same_gauge(self, other: "GaugedFn") -> bool:
        return self.eps == other.eps and self.a == other.a

    def log_derivative(self) -> UniPoly:
        """Derivative of the exponent: ``-eps*x^3/3 + a*x``."""
        return UniPoly([0, self.a, 0, Fraction(-self.eps, 3)])

    def __mul__(self, other):
        if isinstance(other, GaugedFn):
            if self.is_zero() or other.is_zero():
                return GaugedFn.zero()
            return GaugedFn(self.eps + other.eps, self.a + other.a, self.u * other.u)
        if isinstance(other, (int, _RationalABC, UniPoly)):
            return GaugedFn(self.eps, self.a, self.u * other)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, GaugedFn):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if not self.same_gauge(other):
            raise GaugeMismatchError(
                f"cannot add functions with gauges (eps={self.eps}, a={self.a}) and (eps={other.eps}, a={other.a})"
            )
        return GaugedFn(self.eps, self.a, self.u + other.u)

    def __neg__(self):
        return GaugedFn(self.eps, self.a, -self.u)

    def __sub__(self, other):
        if not isinstance(other, GaugedFn):
            return NotImplemented
        return self + (-other)

    def exact_div(self, other: "GaugedFn") -> "GaugedFn":
        """Exact quotient; gauge exponents subtract, polynomial parts must divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        if self.is_zero():
            return GaugedFn.zero()
        if other.eps > self.eps:
            raise GaugeMismatchError("quotient would carry a growing quartic factor")
        return GaugedFn(self.eps - other.eps, self.a - other.a, exact_divide(self.u, other.u))

    def __eq__(self, other):
        if not isinstance(other, GaugedFn):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.same_gauge(other) and self.u == other.u

    def __hash__(self):
        if self.is_zero():
            return hash(0)
        return hash((self.eps, self.a, self.u))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        if self.eps:
            parts.append("-x^4/12" if self.eps == 1 else f"-{self.eps}*x^4/12")
        if self.a:
            parts.append(f"{'+' if self.a > 0 and parts else ''}{self.a}*x^2/2")
        if not parts:
            return str(self.u)
        return f"exp({''.join(parts)})*({self.u})"


def hirota_apply_gauged(P: BilinearOp, A: GaugedFn, B: GaugedFn) -> GaugedFn:
    """``P(D_x) A.B`` for gauged arguments, via the Leibniz rules for the gauge.

    With ``g_i = exp(-eps x^4/12 + a_i x^2/2)`` and ``a12 = a1 - a2``::

        D  (g1 u1 . g2 u2) = g1 g2 [D(u1.u2) + a12 x u1 u2]
        D^2(g1 u1 . g2 u2) = g1 g2 [D^2(u1.u2) + 2 a12 x D(u1.u2)
                                    + (a12^2 x^2 - 2 eps x^2 + a1 + a2) u1 u2]
    """
    if P.order > 2:
        raise GaugeMismatchError("gauged Hirota rules are implemented for D_x powers up to 2")
    if A.is_zero() or B.is_zero():
        return GaugedFn.zero()
    if A.eps != B.eps:
        raise GaugeMismatchError(f"quartic gauges differ ({A.eps} vs {B.eps})")
    u1, u2 = A.u, B.u
    a12 = A.a - B.a
    prod0 = u1 * u2
    d1 = hirota_power(1, u1, u2) if P.order >= 1 else ZERO
    acc = ZERO
    for k, c in P.terms.items():
        if k == 0:
            t = prod0
        elif k == 1:
            t = d1 + X * prod0 * a12
        else:
            quad = UniPoly([A.a + B.a, 0, a12 * a12 - 2 * A.eps])
            t = hirota_power(2, u1, u2) + X * d1 * (2 * a12) + quad * prod0
        acc = acc + c * t
    return GaugedFn(A.eps + B.eps, A.a + B.a, acc)


# multivariate --------------------------------------------------------------

KP_OPERATOR = {(4, 0, 0): 1, (1, 0, 1): -4, (0, 2, 0): 3}
MKP_OPERATOR = {(2, 0): 1, (0, 1): 1}


def _hirota_multi_index(alpha: tuple[int, ...], F: MultiPoly, G: MultiPoly) -> MultiPoly:
    acc = MultiPoly.const(0, max(F.nvars, G.nvars))
    for beta in product(*(range(a + 1) for a in alpha)):
        coeff = 1
        dF, dG = F, G
        for i, (a, b) in enumerate(zip(alpha, beta)):
            coeff *= comb(a, b)
            if a - b:
                dF = dF.partial(i, a - b)
            if b:
                dG = dG.partial(i, b)
            if dF.is_zero() or dG.is_zero():
                break
        else:
            acc = acc + dF * dG * (-coeff if sum(beta) % 2 else coeff)
    return acc


def hirota_multi(P: Mapping[tuple[int, ...], object], F: MultiPoly, G: MultiPoly) -> MultiPoly:
    """Multivariate Hirota operator with constant coefficients.

    ``P`` maps multi-indices ``(k1, k2, ...)`` (powers of ``D_{t1}, D_{t2}, ...``)
    to coefficients.
    """
    need = max((len(a) for a in P), default=0)
    n = max(F.nvars, G.nvars, need)
    F, G = F.extend(n), G.extend(n)
    acc = MultiPoly.const(0, n)
    for alpha, c in P.items():
        alpha = tuple(alpha) + (0,) * (n - len(alpha))
        if c:
            acc = acc + _hirota_multi_index(alpha, F, G) * Fraction(c)
    return acc
