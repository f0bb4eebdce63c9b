"""The symmetric P_IV system as a differential field with its affine Weyl group action.

Elements live in ``Q(a0, a1)(f0, f1, f2)(g)``; ``a2`` is eliminated as
``3 - a0 - a1`` and the independent variable is ``x = (f0 + f1 + f2)/3``, so
equality of elements is decided by cross-multiplying polynomials.  The
derivation is

    f_i' = a_i - f_i (f_{i+1} - f_{i+2}),    g' = -(1/2) sum (f_i - x)^2.

Weyl words act by substitution, rightmost letter first: ``"s1 s0"`` applies
``s0`` to the expression and then ``s1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .algebra.numbers import fmt_rational, latex_rational
from .algebra import ONE, MultiPoly, RationalFunction, UniPoly, UniRatFunc, ratfunc_equal
from .checks import CheckResult, RegularizationError, Report, WordParseError

NVARS = 6
A0, A1, F0, F1, F2, G = range(NVARS)
VAR_NAMES = ["a0", "a1", "f0", "f1", "f2", "g"]
LATEX_NAMES = [r"\alpha_0", r"\alpha_1", "f_0", "f_1", "f_2", "g"]


def _var(i: int) -> MultiPoly:
    return MultiPoly.var(i, NVARS)


def _const(c) -> MultiPoly:
    return MultiPoly.const(c, NVARS)


class FieldElem:
    """Element of the differential field, a thin wrapper over :class:`RationalFunction`."""

    __slots__ = ("value",)

    def __init__(self, value):
        if isinstance(value, FieldElem):
            value = value.value
        elif isinstance(value, MultiPoly):
            value = RationalFunction(value.extend(NVARS))
        elif isinstance(value, (int, _RationalABC)):
            value = RationalFunction(_const(value))
        if not isinstance(value, RationalFunction):
            raise TypeError(f"cannot make a field element from {type(value).__name__}")
        self.value = value

    @staticmethod
    def _lift(other):
        if isinstance(other, FieldElem):
            return other
        if isinstance(other, (int, _RationalABC, MultiPoly, RationalFunction)):
            return FieldElem(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FieldElem(self.value + o.value)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(-self.value)

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FieldElem(self.value - o.value)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FieldElem(o.value - self.value)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FieldElem(self.value * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return FieldElem(self.value / other)
        o = self._lift(other)
        return NotImplemented if o is None else FieldElem(self.value / o.value)

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FieldElem(o.value / self.value)

    def __pow__(self, k: int):
        return FieldElem(self.value ** k)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ratfunc_equal(self.value, o.value)

    __hash__ = None

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def uses_g(self) -> bool:
        return self.value.num.degree_in(G) > 0 or self.value.den.degree_in(G) > 0

    def format(self) -> str:
        return self.value.format(VAR_NAMES)

    def to_latex(self) -> str:
        return self.value.to_latex(LATEX_NAMES)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"FieldElem({self.format()!r})"


ALPHA0 = FieldElem(_var(A0))
ALPHA1 = FieldElem(_var(A1))
ALPHA2 = FieldElem(3 - _var(A0) - _var(A1))
FS = (FieldElem(_var(F0)), FieldElem(_var(F1)), FieldElem(_var(F2)))
ALPHAS = (ALPHA0, ALPHA1, ALPHA2)
GVAR = FieldElem(_var(G))
XVAR = FieldElem((_var(F0) + _var(F1) + _var(F2)) * Fraction(1, 3))


# -- derivation ---------------------------------------------------------------

@lru_cache(maxsize=1)
def _generator_derivatives() -> tuple[MultiPoly, ...]:
    f = [_var(F0), _var(F1), _var(F2)]
    a = [_var(A0), _var(A1), 3 - _var(A0) - _var(A1)]
    x = (f[0] + f[1] + f[2]) * Fraction(1, 3)
    df = [a[i] - f[i] * (f[(i + 1) % 3] - f[(i + 2) % 3]) for i in range(3)]
    dg = ((f[0] - x) ** 2 + (f[1] - x) ** 2 + (f[2] - x) ** 2) * Fraction(-1, 2)
    return (_const(0), _const(0), df[0], df[1], df[2], dg)


def _derive_poly(p: MultiPoly) -> MultiPoly:
    gens = _generator_derivatives()
    acc = _const(0)
    for i in range(NVARS):
        if gens[i].is_zero() or p.degree_in(i) == 0:
            continue
        acc = acc + p.partial(i) * gens[i]
    return acc


def derive(e: FieldElem) -> FieldElem:
    """The derivation ``'`` with ``x' = 1``, extended by the quotient rule."""
    e = FieldElem(e)
    n, d = e.value.num, e.value.den
    dn = _derive_poly(n)
    if d.total_degree() == 0:
        return FieldElem(RationalFunction(dn, d))
    dd = _derive_poly(d)
    return FieldElem(RationalFunction(dn * d - n * dd, d * d))


# -- Weyl words -----------------------------------------------------------------

LETTERS = ("s0", "s1", "s2", "pi", "pi^-1")
_INVERSE = {"s0": "s0", "s1": "s1", "s2": "s2", "pi": "pi^-1", "pi^-1": "pi"}
_MACROS = {"T1": ("pi", "s2", "s1"), "T2": ("s1", "pi", "s2")}
_TOKEN = re.compile(r"\s*(s[012]|pi|π|T[12])(?:\s*\^\s*\(?\s*([+-]?\d+)\s*\)?)?\s*")


@dataclass(frozen=True)
class WeylWord:
    """Word in ``s0, s1, s2, pi, pi^-1``; applied rightmost letter first."""

    letters: tuple[str, ...] = ()

    def __post_init__(self):
        bad = [l for l in self.letters if l not in LETTERS]
        if bad:
            raise WordParseError(f"unknown letters {bad}")

    @classmethod
    def parse(cls, text: str) -> "WeylWord":
        """Parse e.g. ``"s1 s0"``, ``"pi pi s2"``, ``"T1^3 T2^-1"``, ``"1"`` (identity)."""
        text = text.strip()
        if text in ("", "1", "e", "id"):
            return cls(())
        letters: list[str] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise WordParseError(f"cannot parse Weyl word {text!r} at position {pos}")
            name = "pi" if m.group(1) == "π" else m.group(1)
            k = int(m.group(2)) if m.group(2) else 1
            base = _MACROS.get(name, (name,))
            if k < 0:
                base = tuple(_INVERSE[l] for l in reversed(base))
            letters.extend(base * abs(k))
            pos = m.end()
        return cls(tuple(letters))

    def inverse(self) -> "WeylWord":
        return WeylWord(tuple(_INVERSE[l] for l in reversed(self.letters)))

    def __mul__(self, other: "WeylWord") -> "WeylWord":
        return WeylWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(self.letters) if self.letters else "1"


def _as_word(w) -> WeylWord:
    if isinstance(w, WeylWord):
        return w
    if isinstance(w, str):
        return WeylWord.parse(w)
    return WeylWord(tuple(w))


@lru_cache(maxsize=None)
def _letter_images(letter: str) -> tuple[RationalFunction, ...]:
    """Images of ``(a0, a1, f0, f1, f2, g)`` under one letter."""
    a = [ALPHA0, ALPHA1, ALPHA2]
    f = list(FS)
    g = GVAR
    if letter == "pi":
        img = [a[1], a[2], f[1], f[2], f[0], g]
    elif letter == "pi^-1":
        img = [a[2], a[0], f[2], f[0], f[1], g]
    else:
        i = int(letter[1])
        q = a[i] / f[i]
        new_a = [a[j] + a[i] if j != i else -a[i] for j in range(3)]
        new_f = list(f)
        new_f[(i + 1) % 3] = f[(i + 1) % 3] - q
        new_f[(i + 2) % 3] = f[(i + 2) % 3] + q
        img = [new_a[0], new_a[1], new_f[0], new_f[1], new_f[2], g + q]
    return tuple(e.value for e in img)


def _subst_poly(p: MultiPoly, vals: Sequence[RationalFunction]):
    """Substitute rational values into ``p``.

    Variables whose values share a denominator are grouped so that each
    distinct denominator appears only to the power actually needed.  Returns
    ``(numerator, {denominator: power})``.
    """
    one = _const(1)
    if p.is_zero():
        return p, {}
    groups: dict[MultiPoly, list[int]] = {}
    for i, v in enumerate(vals):
        if p.degree_in(i) and v.den != one:
            groups.setdefault(v.den, []).append(i)
    need = {}
    for d, idx in groups.items():
        need[d] = max(sum(e[i] for i in idx) for e, _ in p.items())
    cache: dict[tuple[int, int], MultiPoly] = {}

    def power(base: MultiPoly, key, e):
        k = (key, e)
        if k not in cache:
            cache[k] = one if e == 0 else (base if e == 1 else power(base, key, e - 1) * base)
        return cache[k]

    dens = list(groups)
    acc = _const(0)
    for e, c in p.items():
        term = one * c
        for i in range(NVARS):
            if e[i]:
                term = term * power(vals[i].num, ("n", i), e[i])
        for j, d in enumerate(dens):
            used = sum(e[i] for i in groups[d])
            if need[d] - used:
                term = term * power(d, ("d", j), need[d] - used)
        acc = acc + term
    return acc, {d: need[d] for d in dens}


def substitute(e: FieldElem, vals: Sequence[RationalFunction]) -> FieldElem:
    """Ring substitution ``var_i -> vals[i]`` applied to numerator and denominator."""
    n, dn = _subst_poly(e.value.num, vals)
    d, dd = _subst_poly(e.value.den, vals)
    num, den = n, d
    for base in set(dn) | set(dd):
        k = dd.get(base, 0) - dn.get(base, 0)
        if k > 0:
            num = num * base ** k
        elif k < 0:
            den = den * base ** (-k)
    return FieldElem(RationalFunction(num, den))


def weyl_apply(w, e: FieldElem) -> FieldElem:
    """``w(e)`` by substitution, rightmost letter first."""
    e = FieldElem(e)
    for letter in reversed(_as_word(w).letters):
        e = substitute(e, _letter_images(letter))
    return e


# -- the parameter space V ------------------------------------------------------

@dataclass(frozen=True)
class VPoint:
    v1: Fraction
    v2: Fraction
    v3: Fraction

    def __post_init__(self):
        for name in ("v1", "v2", "v3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.v1 + self.v2 + self.v3 != 0:
            raise ValueError("a point of V must satisfy v1 + v2 + v3 = 0")

    def as_tuple(self):
        return (self.v1, self.v2, self.v3)


_THIRD = Fraction(1, 3)


def _letter_v(letter: str, v: VPoint) -> VPoint:
    v1, v2, v3 = v.as_tuple()
    if letter == "s0":
        return VPoint(v3 + 1, v2, v1 - 1)
    if letter == "s1":
        return VPoint(v2, v1, v3)
    if letter == "s2":
        return VPoint(v1, v3, v2)
    if letter == "pi":
        return VPoint(v3 + 2 * _THIRD, v1 - _THIRD, v2 - _THIRD)
    return VPoint(v2 + _THIRD, v3 + _THIRD, v1 - 2 * _THIRD)


def weyl_apply_v(w, v: VPoint) -> VPoint:
    """Affine action on ``V``; letters act right to left."""
    for letter in reversed(_as_word(w).letters):
        v = _letter_v(letter, v)
    return v


def params_v_to_alpha(v: VPoint) -> tuple[Fraction, Fraction, Fraction]:
    v1, v2, v3 = v.as_tuple()
    return (3 * (1 - v1 + v3), 3 * (v1 - v2), 3 * (v2 - v3))


def params_alpha_to_v(alpha: Sequence) -> VPoint:
    a0, a1, a2 = (Fraction(a) for a in alpha)
    if a0 + a1 + a2 != 3:
        raise ValueError("parameters must satisfy a0 + a1 + a2 = 3")
    v13 = 1 - a0 / 3  # v1 - v3
    v23 = a2 / 3  # v2 - v3
    v3 = -(v13 + v23) / 3
    return VPoint(v13 + v3, v23 + v3, v3)


def params_alpha_to_ab(alpha: Sequence) -> tuple[Fraction, Fraction]:
    """``(a, b) = (1 + 3 v3, -2 (v1 - v2)^2)``."""
    v = params_alpha_to_v(alpha)
    return (1 + 3 * v.v3, -2 * (v.v1 - v.v2) ** 2)


def params_from_degrees(d: Sequence) -> tuple[Fraction, Fraction, Fraction]:
    """Parameters of a similarity-reduced triple from the homogeneity degrees ``d_i``."""
    d0, d1, d2 = (Fraction(t) for t in d)
    return (1 - 2 * d0 + d1 + d2, 1 + d0 - 2 * d1 + d2, 1 + d0 + d1 - 2 * d2)


# -- concrete solutions -----------------------------------------------------------

@dataclass(frozen=True)
class SolutionTriple:
    """Rational solution ``(f0, f1, f2)`` together with its parameters."""

    f: tuple[UniRatFunc, UniRatFunc, UniRatFunc]
    alphas: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(UniRatFunc._coerce(t) for t in self.f))
        object.__setattr__(self, "alphas", tuple(Fraction(a) for a in self.alphas))

    def __str__(self):
        a = ", ".join(str(t) for t in self.alphas)
        fs = ", ".join(t.format() for t in self.f)
        return f"({a}; {fs})"


def verify_solution(s: SolutionTriple) -> Report:
    """Check ``f_i' + f_i (f_{i+1} - f_{i+2}) = alpha_i`` exactly."""
    rep = Report("p4f")
    f, a = s.f, s.alphas
    rep.add("alpha sum", sum(a) == 3, f"sum = {sum(a)}")
    rep.add("f sum", f[0] + f[1] + f[2] == UniRatFunc(UniPoly([0, 3])), f"sum = {f[0] + f[1] + f[2]}")
    n = [t.num for t in f]
    d = [t.den for t in f]
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        # residual times d_i^2 d_j d_k, so no gcd is needed
        res = (
            (n[i].derivative() * d[i] - n[i] * d[i].derivative()) * d[j] * d[k]
            + n[i] * d[i] * (n[j] * d[k] - n[k] * d[j])
            - d[i] * d[i] * d[j] * d[k] * a[i]
        )
        detail = ""
        if not res.is_zero():
            detail = f"residual {UniRatFunc(res, d[i] * d[i] * d[j] * d[k])}"
        rep.add(f"equation {i}", res.is_zero(), detail)
    return rep


def evaluate_at(e: FieldElem, alphas: Sequence, fs: Sequence, g=None) -> UniRatFunc:
    """Evaluate ``e`` on a concrete solution; raises if a denominator vanishes."""
    one = UniRatFunc(ONE)
    if g is None:
        if e.uses_g():
            raise ValueError("expression involves g but no value for g was given")
        g = one * 0
    vals = [one * Fraction(alphas[0]), one * Fraction(alphas[1])] + [UniRatFunc._coerce(t) for t in fs] + [UniRatFunc._coerce(g)]
    num = e.value.num.evaluate(vals, one=one)
    den = e.value.den.evaluate(vals, one=one)
    if den.is_zero():
        raise RegularizationError(
            f"denominator {e.value.den.format(VAR_NAMES)} vanishes on this solution; "
            "the transformation needs a limiting procedure here"
        )
    return num / den


def apply_word_to_solution(w, s: SolutionTriple) -> SolutionTriple:
    """Backlund transform of a concrete rational solution."""
    w = _as_word(w)
    alphas = tuple(evaluate_at(weyl_apply(w, a), s.alphas, s.f) for a in ALPHAS)
    for a in alphas:
        if not (a.is_polynomial() and a.num.degree <= 0):
            raise ValueError("transformed parameters are not constant")
    new_a = tuple(a.num[0] for a in alphas)
    new_f = tuple(evaluate_at(weyl_apply(w, fi), s.alphas, s.f) for fi in FS)
    return SolutionTriple(new_f, new_a)


SEED_A = SolutionTriple((UniPoly([0, 1]),) * 3, (1, 1, 1))
SEED_B = SolutionTriple((UniPoly([0, 3]), UniPoly(), UniPoly()), (3, 0, 0))


# -- symbolic identity checks -------------------------------------------------------

def check_thm1_ode(*, xf2_coeff=6, param_coeff=None) -> CheckResult:
    """The second-order equation satisfied by ``f1``, as an identity in the field::

        f1'' - f1'^2/(2 f1) - 3/2 f1^3 + 6 x f1^2 + (-9/2 x^2 + a2 - a0) f1 + a1^2/(2 f1) = 0

    The keywords exist for mutation testing.  ``param_coeff`` replaces the
    linear coefficient ``a2 - a0``; passing ``a0 - a2`` gives a false identity.
    """
    f1 = FS[1]
    a0, a1, a2 = ALPHAS
    if param_coeff is None:
        param_coeff = a2 - a0
    x = XVAR
    d1 = derive(f1)
    d2 = derive(d1)
    res = (
        d2
        - Fraction(1, 2) * d1 * d1 / f1
        - Fraction(3, 2) * f1 ** 3
        + xf2_coeff * x * f1 ** 2
        + (Fraction(-9, 2) * x * x + param_coeff) * f1
        + a1 * a1 / (2 * f1)
    )
    ok = res.is_zero()
    return CheckResult("second-order equation for f1", ok, "" if ok else f"residual {res}")


def log_tau_derivatives() -> tuple[FieldElem, FieldElem, FieldElem]:
    """``F_i' = (log tau_i)' = (g - f_{i+1} + f_{i+2})/3``."""
    return tuple((GVAR - FS[(i + 1) % 3] + FS[(i + 2) % 3]) / 3 for i in range(3))


def check_F2_identity(*, include_alpha=True) -> Report:
    """Second derivatives of ``F_i = log tau_i`` and the bilinear system behind them."""
    rep = Report("log-tau identities")
    Fp = log_tau_derivatives()
    Fpp = tuple(derive(t) for t in Fp)
    a = ALPHAS
    x = XVAR
    scale = 1 if include_alpha else 0
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        res = Fpp[i] + x * (Fp[j] - Fp[k]) + (Fp[i] - Fp[j]) * (Fp[i] - Fp[k]) + scale * (a[j] - a[k]) / 3
        rep.add(f"F{i}'' closed form", res.is_zero(), "" if res.is_zero() else f"residual {res}")
    for i in range(3):
        j = (i + 1) % 3
        d = Fp[i] - Fp[j]
        res = Fpp[i] + Fpp[j] + d * d - x * d - scale * (a[i] - a[j]) / 3
        rep.add(f"bilinear form {i}{j}", res.is_zero(), "" if res.is_zero() else f"residual {res}")
    res = 2 * (Fpp[0] + Fpp[1] + Fpp[2]) + sum(((Fp[(i + 1) % 3] - Fp[(i + 2) % 3]) ** 2 for i in range(3)), FieldElem(0))
    rep.add("sum relation", res.is_zero(), "" if res.is_zero() else f"residual {res}")
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        res = FS[i] - (Fp[j] - Fp[k] + x)
        rep.add(f"f{i} from log-derivatives", res.is_zero())
    return rep


def hamiltonian() -> FieldElem:
    f0, f1, f2 = FS
    return (f0 * f1 * f2 + ALPHA1 * f2 - ALPHA2 * f1) / 3


def check_hamiltonian() -> CheckResult:
    f0, f1, f2 = FS
    res = derive(hamiltonian()) - f1 * f2
    return CheckResult("H' = f1 f2", res.is_zero(), "" if res.is_zero() else f"residual {res}")


GENERATORS = {"f0": FS[0], "f1": FS[1], "f2": FS[2], "a0": ALPHA0, "a1": ALPHA1, "g": GVAR}

RELATIONS = {
    "s0^2": ("s0 s0", ""),
    "s1^2": ("s1 s1", ""),
    "s2^2": ("s2 s2", ""),
    "braid s0 s1": ("s0 s1 s0", "s1 s0 s1"),
    "braid s1 s2": ("s1 s2 s1", "s2 s1 s2"),
    "braid s2 s0": ("s2 s0 s2", "s0 s2 s0"),
    "pi^3": ("pi pi pi", ""),
    "pi pi^-1": ("pi pi^-1", ""),
    "pi s0 = s1 pi": ("pi s0", "s1 pi"),
    "pi s1 = s2 pi": ("pi s1", "s2 pi"),
    "pi s2 = s0 pi": ("pi s2", "s0 pi"),
}


def weyl_relations_check(depth: int = 1) -> Report:
    """Defining relations on every generator, and commutation with the derivation.

    ``depth >= 2`` also checks commutation for all words of that length over
    ``s0, s1, s2, pi``.
    """
    rep = Report("Weyl group relations")
    for name, (lhs, rhs) in RELATIONS.items():
        for gname, gen in GENERATORS.items():
            ok = weyl_apply(lhs, gen) == weyl_apply(rhs, gen)
            rep.add(f"{name} on {gname}", ok)
    for letter in LETTERS:
        for gname, gen in GENERATORS.items():
            ok = weyl_apply(letter, derive(gen)) == derive(weyl_apply(letter, gen))
            rep.add(f"{letter} commutes with ' on {gname}", ok)
    if depth >= 2:
        for word in words_up_to(depth, exact=True):
            for gname, gen in GENERATORS.items():
                if gname in ("a0", "a1"):
                    continue
                ok = weyl_apply(word, derive(gen)) == derive(weyl_apply(word, gen))
                rep.add(f"{word} commutes with ' on {gname}", ok)
    return rep


def words_up_to(n: int, exact: bool = False, alphabet: Iterable[str] = ("s0", "s1", "s2", "pi")) -> list[WeylWord]:
    alphabet = tuple(alphabet)
    out = [WeylWord(())]
    layer = [()]
    for k in range(1, n + 1):
        layer = [w + (l,) for w in layer for l in alphabet]
        if not exact or k == n:
            out.extend(WeylWord(w) for w in layer)
    return [w for w in out if not exact or len(w) == n]


# -- display helpers ----------------------------------------------------------------

def linear_form(e: FieldElem):
    """If ``e`` is affine in the parameters, return ``(c, [k0, k1, k2])`` choosing
    the representation (``a0 + a1 + a2 = 3``) with the fewest terms."""
    v = e.value
    if v.den.total_degree() != 0 or v.num.total_degree() > 1:
        return None
    for i in (F0, F1, F2, G):
        if v.num.degree_in(i):
            return None
    scale = 1 / v.den.coeff((0,) * NVARS)
    c = v.num.coeff((0,) * NVARS) * scale
    p = v.num.coeff((1, 0, 0, 0, 0, 0)) * scale
    q = v.num.coeff((0, 1, 0, 0, 0, 0)) * scale
    options = [
        (c, [p, q, Fraction(0)]),  # a2 eliminated
        (c + 3 * p, [Fraction(0), q - p, -p]),  # a0 eliminated
        (c + 3 * q, [p - q, Fraction(0), -q]),  # a1 eliminated
    ]

    def cost(opt):
        const, ks = opt
        nterms = sum(1 for k in ks if k) + (1 if const else 0)
        negatives = sum(1 for k in ks if k < 0) + (1 if const < 0 else 0)
        return (nterms, negatives, 1 if const else 0)

    return min(options, key=cost)


def format_linear(form, latex: bool = False) -> str:
    const, ks = form
    names = [r"\alpha_0", r"\alpha_1", r"\alpha_2"] if latex else ["a0", "a1", "a2"]
    fmt = latex_rational if latex else fmt_rational
    parts = []
    for k, name in zip(ks, names):
        if not k:
            continue
        mag = abs(k)
        body = name if mag == 1 else (f"{fmt(mag)} {name}" if latex else f"{fmt(mag)}*{name}")
        parts.append(("-" if k < 0 else "+", body))
    if const or not parts:
        parts.append(("-" if const < 0 else "+", fmt(abs(const))))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
