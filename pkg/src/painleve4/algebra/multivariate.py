"""Sparse multivariate polynomials and rational functions over Q.

Exponent vectors are packed into a single int (``_BITS`` bits per variable,
variable 0 in the lowest field) so that monomial multiplication is integer
addition.  Exponents must stay below ``2**_BITS``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational as _RationalABC
from typing import Mapping, Sequence

from .numbers import fmt_rational, latex_rational
from .univariate import _join_terms

_BITS = 16
_MASK = (1 << _BITS) - 1


def pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _MASK:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (_BITS * i)
    return key


def unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * i)) & _MASK for i in range(nvars))


def _exp_of(key: int, i: int) -> int:
    return (key >> (_BITS * i)) & _MASK


def _scaled(values) -> tuple[list[int], int]:
    d = 1
    for c in values:
        d = lcm(d, c.denominator)
    return [c.numerator * (d // c.denominator) for c in values], d


class MultiPoly:
    """Polynomial in ``nvars`` variables with Fraction coefficients.

    ``terms`` maps packed exponent keys to nonzero coefficients.
    """

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: Mapping | None = None, nvars: int = 1):
        self.nvars = nvars
        self.terms = {}
        self._hash = None
        if terms:
            for k, c in terms.items():
                if isinstance(k, tuple):
                    if len(k) != nvars:
                        raise ValueError("exponent vector length does not match nvars")
                    k = pack(k)
                c = Fraction(c)
                if c:
                    self.terms[k] = c

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "MultiPoly":
        p = object.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def const(cls, c, nvars: int) -> "MultiPoly":
        c = Fraction(c)
        return cls._raw({0: c} if c else {}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        return cls._raw({1 << (_BITS * i): Fraction(1)}, nvars)

    # -- inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """Yield ``(exponent_tuple, coefficient)`` pairs."""
        for k, c in self.terms.items():
            yield unpack(k, self.nvars), c

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(pack(exps), Fraction(0))

    def degree_in(self, i: int) -> int:
        return max((_exp_of(k, i) for k in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(unpack(k, self.nvars)) for k in self.terms), default=-1)

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        """Set of weighted degrees of the monomials present."""
        return {sum(w * e for w, e in zip(weights, unpack(k, self.nvars))) for k in self.terms}

    def _order_key(self, key: int):
        e = unpack(key, self.nvars)
        return (sum(e), e)

    def leading(self) -> tuple[int, Fraction]:
        """Leading ``(key, coeff)`` in graded-lex order (variable 0 biggest)."""
        k = max(self.terms, key=self._order_key)
        return k, self.terms[k]

    def sorted_items(self, order: str = "lex"):
        """Items in descending order; ``order`` is ``"lex"`` or ``"grlex"``."""
        if order == "grlex":
            keyf = lambda kv: (sum(kv[0]), kv[0])
        else:
            keyf = lambda kv: kv[0]
        return sorted(self.items(), key=keyf, reverse=True)

    def extend(self, nvars: int) -> "MultiPoly":
        """Same polynomial viewed in ``nvars >= self.nvars`` variables."""
        if nvars < self.nvars:
            if any(k >> (_BITS * nvars) for k in self.terms):
                raise ValueError("cannot drop variables that occur in the polynomial")
        return MultiPoly._raw(dict(self.terms), nvars)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                n = max(self.nvars, other.nvars)
                if n != other.nvars:
                    return other.extend(n)
            return other
        if isinstance(other, (int, _RationalABC)):
            return MultiPoly.const(other, self.nvars)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v += c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return MultiPoly._raw(out, max(self.nvars, o.nvars))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({k: -c for k, c in self.terms.items()}, self.nvars)

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
                return MultiPoly._raw({}, self.nvars)
            c = Fraction(other)
            return MultiPoly._raw({k: v * c for k, v in self.terms.items()}, self.nvars)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        nv = max(self.nvars, o.nvars)
        if not self.terms or not o.terms:
            return MultiPoly._raw({}, nv)
        ka, va = zip(*self.terms.items())
        kb, vb = zip(*o.terms.items())
        ia, da = _scaled(va)
        ib, db = _scaled(vb)
        acc: dict[int, int] = {}
        get = acc.get
        for k1, c1 in zip(ka, ia):
            for k2, c2 in zip(kb, ib):
                k = k1 + k2
                acc[k] = get(k, 0) + c1 * c2
        d = da * db
        if d == 1:
            out = {k: Fraction(c) for k, c in acc.items() if c}
        else:
            out = {k: Fraction(c, d) for k, c in acc.items() if c}
        return MultiPoly._raw(out, nv)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = MultiPoly.const(1, self.nvars), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def content(self) -> Fraction:
        """Positive rational g with ``self / g`` primitive over Z."""
        from math import gcd

        if not self.terms:
            return Fraction(0)
        nums, d = _scaled(self.terms.values())
        g = 0
        for n in nums:
            g = gcd(g, n)
        return Fraction(g, d)

    def monomial_gcd(self) -> int:
        """Packed key of the largest monomial dividing every term."""
        if not self.terms:
            return 0
        mins = None
        for k in self.terms:
            e = unpack(k, self.nvars)
            mins = list(e) if mins is None else [min(a, b) for a, b in zip(mins, e)]
        return pack(mins)

    def shift_down(self, key: int) -> "MultiPoly":
        """Divide by the monomial ``key`` (which must divide every term)."""
        if not key:
            return self
        return MultiPoly._raw({k - key: c for k, c in self.terms.items()}, self.nvars)

    def shift_up(self, key: int) -> "MultiPoly":
        if not key:
            return self
        return MultiPoly._raw({k + key: c for k, c in self.terms.items()}, self.nvars)

    # -- calculus / evaluation ---------------------------------------------
    def partial(self, i: int, k: int = 1) -> "MultiPoly":
        """k-th partial derivative in variable ``i``."""
        if k == 0:
            return self
        unit = 1 << (_BITS * i)
        out = {}
        for key, c in self.terms.items():
            e = _exp_of(key, i)
            if e >= k:
                f = 1
                for j in range(e - k + 1, e + 1):
                    f *= j
                out[key - k * unit] = c * f
        return MultiPoly._raw(out, self.nvars)

    def evaluate(self, values: Sequence, one=None):
        """Substitute ``values[i]`` for variable ``i``.

        Values may be any ring elements supporting ``+`` and ``*`` with
        Fractions (Fraction, UniPoly, UniRatFunc, MultiPoly, ...).  Powers are
        cached per variable.
        """
        if len(values) < self.nvars:
            raise ValueError("not enough values for substitution")
        if one is None:
            one = Fraction(1)
        cache: list[dict[int, object]] = [dict() for _ in range(self.nvars)]

        def power(i, e):
            tab = cache[i]
            if e not in tab:
                tab[e] = one if e == 0 else (values[i] if e == 1 else power(i, e - 1) * values[i])
            return tab[e]

        acc = one * 0
        for key, c in self.terms.items():
            term = None
            for i in range(self.nvars):
                e = _exp_of(key, i)
                if e:
                    term = power(i, e) if term is None else term * power(i, e)
            acc = acc + (one * c if term is None else term * c)
        return acc

    # -- printing -----------------------------------------------------------
    def format(self, names: Sequence[str] | None = None, order: str = "lex") -> str:
        names = names or [f"t{i + 1}" for i in range(self.nvars)]
        terms = []
        for e, c in self.sorted_items(order):
            mono = "*".join(n if p == 1 else f"{n}^{p}" for n, p in zip(names, e) if p)
            terms.append((c, mono))
        return _join_terms(terms, fmt_rational, "*")

    def to_latex(self, names: Sequence[str] | None = None, order: str = "lex") -> str:
        names = names or [f"t_{{{i + 1}}}" for i in range(self.nvars)]
        terms = []
        for e, c in self.sorted_items(order):
            mono = " ".join(n if p == 1 else f"{n}^{{{p}}}" for n, p in zip(names, e) if p)
            terms.append((c, mono))
        return _join_terms(terms, latex_rational, " ")

    def __repr__(self):
        return f"MultiPoly({self.format()!r}, nvars={self.nvars})"

    def __str__(self):
        return self.format()


class RationalFunction:
    """Quotient of two :class:`MultiPoly` in the same variables.

    Normalization is deliberately cheap: the common monomial factor is
    cancelled and the denominator is scaled so its graded-lex leading
    coefficient is 1.  No multivariate gcd is taken, so two equal elements may
    have different representations; compare with ``==`` (cross-multiplication).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.const(1, num.nvars)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.nvars != den.nvars:
            n = max(num.nvars, den.nvars)
            num, den = num.extend(n), den.extend(n)
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return len(self.den.terms) == 1 and 0 in self.den.terms

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction(other)
        if isinstance(other, (int, _RationalABC)):
            return RationalFunction._raw(MultiPoly.const(other, self.nvars), MultiPoly.const(1, self.nvars))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        if o.is_polynomial():
            return RationalFunction(self.num + o.num * self.den, self.den)
        if self.is_polynomial():
            return RationalFunction(self.num * o.den + o.num, o.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

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
                return RationalFunction._raw(MultiPoly.const(0, self.nvars), MultiPoly.const(1, self.nvars))
            return RationalFunction._raw(self.num * other, self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RationalFunction._raw(MultiPoly.const(0, self.nvars), MultiPoly.const(1, self.nvars))
        # cancel obvious cross factors before multiplying out
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        if n1 == d2:
            return RationalFunction(n2, d1)
        if n2 == d1:
            return RationalFunction(n1, d2)
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return RationalFunction._raw(self.num * (1 / Fraction(other)), self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._raw(self.num ** k, self.den ** k)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ratfunc_equal(self, o)

    __hash__ = None  # equality is not representation-based

    def evaluate(self, values: Sequence, one=None):
        """Substitute values into numerator and denominator and divide."""
        n = self.num.evaluate(values, one)
        d = self.den.evaluate(values, one)
        if (d.is_zero() if hasattr(d, "is_zero") else d == 0):
            raise ZeroDivisionError("denominator vanishes at the substituted values")
        return n / d

    def format(self, names: Sequence[str] | None = None) -> str:
        n = self.num.format(names, order="grlex")
        if self.is_polynomial():
            c = self.den.terms[0]
            if c == 1:
                return n
            return f"({n})/{fmt_rational(c)}"
        if len(self.num) > 1:
            n = f"({n})"
        d = self.den.format(names, order="grlex")
        if len(self.den) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def to_latex(self, names: Sequence[str] | None = None) -> str:
        n = self.num.to_latex(names, order="grlex")
        if self.is_polynomial() and self.den.terms[0] == 1:
            return n
        return f"\\frac{{{n}}}{{{self.den.to_latex(names, order='grlex')}}}"

    def __repr__(self):
        return f"RationalFunction({self.format()!r})"

    def __str__(self):
        return self.format()


def _normalize(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    nv = num.nvars
    if num.is_zero():
        return num, MultiPoly.const(1, nv)
    if num == den:
        one = MultiPoly.const(1, nv)
        return one, one
    kn, kd = num.monomial_gcd(), den.monomial_gcd()
    if kd:
        common = pack([min(a, b) for a, b in zip(unpack(kn, nv), unpack(kd, nv))])
        num, den = num.shift_down(common), den.shift_down(common)
    _, lc = den.leading()
    if lc != 1:
        inv = 1 / lc
        num, den = num * inv, den * inv
    return num, den


def ratfunc_equal(a: RationalFunction, b: RationalFunction) -> bool:
    """Decide ``a == b`` by cross-multiplication ``a.num*b.den == b.num*a.den``."""
    if a.den == b.den:
        return a.num == b.num
    return a.num * b.den == b.num * a.den
