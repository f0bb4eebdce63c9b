"""Dense univariate polynomials and reduced rational functions over Q."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm, perm
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .numbers import fmt_rational, latex_rational


class NonDivisibleError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""

    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{dividend} is not divisible by {divisor} (remainder {remainder})")


def _scaled(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    # integer numerators over a common denominator
    d = 1
    for c in coeffs:
        d = lcm(d, c.denominator)
    return [c.numerator * (d // c.denominator) for c in coeffs], d


def _trim(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class UniPoly:
    """Polynomial in ``x`` with exact rational coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "UniPoly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def x(cls) -> "UniPoly":
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    # -- inspection ---------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "UniPoly | None":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, _RationalABC)):
            return UniPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw(tuple(-c for c in self.coeffs))

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

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)):
            if not other:
                return UniPoly._raw(())
            c = Fraction(other)
            return UniPoly._raw(tuple(a * c for a in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly._raw(())
        a, da = _scaled(self.coeffs)
        b, db = _scaled(other.coeffs)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        d = da * db
        return UniPoly._raw(_trim([Fraction(c, d) for c in out]))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = UniPoly._raw((Fraction(1),)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = o.degree, o.lead
        if len(rem) - 1 < db:
            return UniPoly._raw(()), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c / lb
            quot[k - db] = q
            for j, bj in enumerate(o.coeffs):
                rem[k - db + j] -= q * bj
        return UniPoly._raw(_trim(quot)), UniPoly._raw(_trim(rem[:db]))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    # -- calculus / evaluation ---------------------------------------------
    def derivative(self, k: int = 1) -> "UniPoly":
        c = self.coeffs
        if k <= 0:
            return self
        if len(c) <= k:
            return UniPoly._raw(())
        return UniPoly._raw(tuple(c[i] * perm(i, k) for i in range(k, len(c))))

    def __call__(self, value):
        acc = Fraction(0) if isinstance(value, (int, _RationalABC)) else value * 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def to_list(self) -> list[Fraction]:
        return list(self.coeffs)

    # -- printing -----------------------------------------------------------
    def __repr__(self):
        return f"UniPoly({self.format()!r})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "x") -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c:
                terms.append((c, _power(var, k, "*", "^")))
        return _join_terms(terms, fmt_rational, "*")

    def to_latex(self, var: str = "x") -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c:
                mono = "" if k == 0 else (var if k == 1 else f"{var}^{{{k}}}")
                terms.append((c, mono))
        return _join_terms(terms, latex_rational, " ")


def _nterms(p: UniPoly) -> int:
    return sum(1 for c in p.coeffs if c)


def _power(var: str, k: int, mul: str, pow_: str) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}{pow_}{k}"


def _join_terms(terms, fmt_coeff, mul: str) -> str:
    """Join (coefficient, monomial) pairs into ``a - b + c`` form."""
    if not terms:
        return "0"
    out = []
    for i, (c, mono) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{fmt_coeff(a)}{mul}{mono}"
        else:
            body = fmt_coeff(a)
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


X = UniPoly.x()
ONE = UniPoly.const(1)
ZERO = UniPoly()


def poly_derivative(p: UniPoly) -> UniPoly:
    return p.derivative()


def _primitive(p: UniPoly) -> tuple[list[int], Fraction]:
    """``p = scale * prim`` with ``prim`` integer, content 1, positive leading coefficient."""
    ints, d = _scaled(p.coeffs)
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints], Fraction(g, d)


def _zz_divide(a: list[int], b: list[int]) -> list[int] | None:
    # exact quotient in Z[x], or None when b does not divide a
    if len(a) < len(b):
        return None
    rem = list(a)
    lb, db = b[-1], len(b) - 1
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        q, r = divmod(c, lb)
        if r:
            return None
        quot[k - db] = q
        for j in range(db + 1):
            rem[k - db + j] -= q * b[j]
    if any(rem[:db]):
        return None
    return quot


def exact_divide(a: UniPoly, b: UniPoly) -> UniPoly:
    """Return ``q`` with ``a == q * b``; raise :class:`NonDivisibleError` otherwise.

    Works on primitive integer forms: if ``b`` divides ``a`` over Q, the
    quotient of the primitive parts is an integer polynomial (Gauss's lemma).
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return a
    pa, sa = _primitive(a)
    pb, sb = _primitive(b)
    q = _zz_divide(pa, pb)
    if q is None:
        raise NonDivisibleError(a, b, divmod(a, b)[1])
    scale = sa / sb
    return UniPoly._raw(tuple(Fraction(c) * scale for c in q))


def _zz_eval(p: list[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _zz_primitive(p: list[int]) -> list[int]:
    g = 0
    for c in p:
        g = gcd(g, c)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def _heuristic_gcd(f: list[int], g: list[int]) -> list[int] | None:
    """Gcd of primitive integer polynomials by evaluation at a large integer.

    The candidate is accepted only if it divides both inputs, and the
    evaluation point always exceeds ``2 min(|f|, |g|) + 2``, which makes an
    accepted candidate the true gcd.
    """
    norm = min(max(abs(c) for c in f), max(abs(c) for c in g))
    xi = 2 * norm + 29
    for _ in range(6):
        h = gcd(_zz_eval(f, xi), _zz_eval(g, xi))
        if h:
            digits = []
            while h:
                d = h % xi
                if d > xi // 2:
                    d -= xi
                digits.append(d)
                h = (h - d) // xi
            cand = _zz_primitive(digits)
            if _zz_divide(f, cand) is not None and _zz_divide(g, cand) is not None:
                return cand
        xi = xi * 73794 * isqrt(isqrt(xi)) // 27011 + 1
    return None


def _prs_gcd(f: list[int], g: list[int]) -> list[int]:
    # primitive pseudo-remainder sequence
    if len(f) < len(g):
        f, g = g, f
    while any(g):
        r = list(f)
        lg, dg = g[-1], len(g) - 1
        while len(r) - 1 >= dg and any(r):
            c = r[-1]
            r = [v * lg for v in r]
            shift = len(r) - 1 - dg
            for j in range(dg + 1):
                r[shift + j] -= c * g[j]
            r.pop()
            while r and not r[-1]:
                r.pop()
        f, g = g, (_zz_primitive(r) if r else [0])
    return _zz_primitive(f)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero only when both inputs are zero)."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    pa, _ = _primitive(a)
    pb, _ = _primitive(b)
    if len(pa) == 1 or len(pb) == 1:
        return UniPoly._raw((Fraction(1),))
    g = _heuristic_gcd(pa, pb)
    if g is None:
        g = _prs_gcd(pa, pb)
    return UniPoly(g).monic()


class UniRatFunc:
    """Quotient ``num/den`` of univariate polynomials, kept coprime with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = UniPoly._coerce(num) if not isinstance(num, UniPoly) else num
        den = ONE if den is None else (den if isinstance(den, UniPoly) else UniPoly._coerce(den))
        if num is None or den is None:
            raise TypeError("UniRatFunc expects polynomial or rational arguments")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = exact_divide(num, g), exact_divide(den, g)
        lc = den.lead
        self.num, self.den = num * (1 / lc), den * (1 / lc)

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniRatFunc):
            return other
        if isinstance(other, (UniPoly, int, _RationalABC)):
            return UniRatFunc(other)
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return UniRatFunc(self.num + o.num, self.den)
        return UniRatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(UniRatFunc)
        r.num, r.den = -self.num, self.den
        return r

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

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return UniRatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return UniRatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return UniRatFunc(1) / (self ** (-k))
        return UniRatFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def derivative(self) -> "UniRatFunc":
        n, d = self.num, self.den
        return UniRatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def __repr__(self):
        return f"UniRatFunc({self.format()!r})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "x") -> str:
        if self.is_polynomial():
            return self.num.format(var)
        n, d = self.num.format(var), self.den.format(var)
        if _nterms(self.num) > 1:
            n = f"({n})"
        if _nterms(self.den) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def to_latex(self, var: str = "x") -> str:
        if self.is_polynomial():
            return self.num.to_latex(var)
        return f"\\frac{{{self.num.to_latex(var)}}}{{{self.den.to_latex(var)}}}"
