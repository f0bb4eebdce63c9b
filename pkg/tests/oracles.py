"""Independent oracles written directly in sympy.

Nothing here calls the package's algebra; values are converted at the
boundary only.
"""

from __future__ import annotations

from functools import lru_cache

import sympy as sp

z = sp.Symbol("z")
x = sp.Symbol("x")


def tvars(n):
    return sp.symbols(f"t1:{n + 2}")[:n] if n else ()


def to_sympy(p, names=None):
    """MultiPoly -> sympy expression in t1..tN (or given symbols)."""
    syms = names or tvars(p.nvars)
    out = sp.Integer(0)
    for e, c in p.items():
        term = sp.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            term *= s ** k
        out += term
    return sp.expand(out)


def uni_to_sympy(p):
    return sum(sp.Rational(c.numerator, c.denominator) * x ** k for k, c in enumerate(p.coeffs))


@lru_cache(maxsize=None)
def p_series(N):
    """p_0..p_N of exp(sum t_k z^k) from n p_n = sum_k k t_k p_{n-k}."""
    t = tvars(N)
    p = [sp.Integer(1)]
    for n in range(1, N + 1):
        p.append(sp.expand(sum((k + 1) * t[k] * p[n - k - 1] for k in range(n)) / n))
    return p


def p_oracle(n, N):
    if n < 0:
        return sp.Integer(0)
    return p_series(N)[n]


def schur_oracle(parts, N=None):
    """Jacobi-Trudi determinant with sympy's own determinant."""
    parts = list(parts)
    N = N if N is not None else max(sum(parts), 1)
    l = len(parts)
    if l == 0:
        return sp.Integer(1)
    M = sp.Matrix(l, l, lambda i, j: p_oracle(parts[i] - i + j, N))
    return sp.expand(M.det(method="berkowitz"))


def vertex_oracle(m, F, N):
    """X_m F = sum_j p_j(t) p_{j-m}(-d~) F with d~ = (d1, d2/2, d3/3, ...).

    Coefficient of z^m in exp(xi(z, t)) exp(-xi(1/z, d~)), applied to a
    polynomial F of bounded weight, so the sums are finite.
    """
    t = tvars(N)
    poly = sp.Poly(F, *t) if F != 0 else None
    w = 0 if poly is None else max(sum((k + 1) * e for k, e in enumerate(mon)) for mon in poly.monoms())
    s = sp.symbols(f"s1:{N + 1}")
    out = sp.Integer(0)
    for j in range(max(m, 0), m + w + 1):
        i = j - m
        # p_i evaluated at s, then s_k -> -d_k / k
        pi = p_oracle(i, N).subs(dict(zip(t, s)), simultaneous=True)
        op_poly = sp.Poly(pi, *s)
        acc = sp.Integer(0)
        for mon, c in op_poly.terms():
            g = F
            coef = c
            for k, e in enumerate(mon):
                if e:
                    g = sp.diff(g, t[k], e)
                    coef *= sp.Rational(-1, k + 1) ** e
            acc += coef * g
        out += p_oracle(j, N) * acc
    return sp.expand(out)


# -- differential field --------------------------------------------------------

a0, a1, f0, f1, f2, g = sp.symbols("a0 a1 f0 f1 f2 g")
a2 = 3 - a0 - a1
F = (f0, f1, f2)
A = (a0, a1, a2)
X = (f0 + f1 + f2) / 3


def field_derive(e):
    """Derivation of the symmetric system, on expressions in f, alpha, g."""
    fd = [A[i] - F[i] * (F[(i + 1) % 3] - F[(i + 2) % 3]) for i in range(3)]
    gd = -sp.Rational(1, 2) * sum((fi - X) ** 2 for fi in F)
    return sum(sp.diff(e, v) * dv for v, dv in zip(F + (g,), fd + [gd]))


def f1_ode_residual(param_coeff):
    d1 = field_derive(f1)
    d2 = field_derive(d1)
    r = (
        d2 - d1 ** 2 / (2 * f1) - sp.Rational(3, 2) * f1 ** 3 + 6 * X * f1 ** 2
        + (-sp.Rational(9, 2) * X ** 2 + param_coeff) * f1 + a1 ** 2 / (2 * f1)
    )
    return sp.simplify(sp.together(r))


def s_letter(i):
    """Images of (a0, a1, f0, f1, f2) under s_i."""
    al = list(A)
    new_a = [al[j] + al[i] if j != i else -al[i] for j in range(3)]
    new_f = list(F)
    new_f[(i + 1) % 3] = F[(i + 1) % 3] - A[i] / F[i]
    new_f[(i + 2) % 3] = F[(i + 2) % 3] + A[i] / F[i]
    return {a0: new_a[0], a1: new_a[1], f0: new_f[0], f1: new_f[1], f2: new_f[2]}


def apply_word(letters, e):
    """Apply s-letters by substitution, rightmost first."""
    for name in reversed(letters):
        i = int(name[1])
        e = e.subs(s_letter(i), simultaneous=True)
    return sp.simplify(sp.together(e))
