"""Named verification suites (used by ``painleve4 verify``).

Every suite returns a :class:`~painleve4.checks.Report`; all comparisons are
exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .algebra import KP_OPERATOR, MKP_OPERATOR, UniPoly, hirota_multi
from .checks import Report
from .lattice import (
    classic_QR,
    f_triple,
    hermite_H,
    hermite_H_schur,
    okamoto_Q,
    okamoto_Q_schur,
    tau_identities_check,
)
from .painleve import (
    SEED_A,
    apply_word_to_solution,
    check_F2_identity,
    check_hamiltonian,
    check_thm1_ode,
    verify_solution,
    weyl_relations_check,
)
from .partitions import Partition, lambda_mn, partitions_up_to
from .schur import (
    SignedPartition,
    hermite_normalization,
    schur,
    schur_partial,
    specialize,
    superfactorial,
    vertex_apply,
    vertex_apply_chain,
)

X = UniPoly([0, 1])


def _sf(n: int) -> int:
    return superfactorial(n)


def suite_seeds() -> Report:
    rep = Report("seeds")
    for (m, n), want in {(0, 0): 1, (1, 0): 1, (1, 1): 1, (2, 1): X}.items():
        rep.add(f"Q_{m},{n} = {want}", okamoto_Q(m, n) == want)
    for (m, n), want in {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): X * 3}.items():
        rep.add(f"H_{m},{n} = {want}", hermite_H(m, n) == want)
    return rep


def suite_okamoto(window: int = 4) -> Report:
    rep = Report("Okamoto polynomials")
    q32 = UniPoly([-1, 0, -2, 0, 1])
    rep.add("Q_3,2 by Toda", okamoto_Q(3, 2) == q32)
    rep.add("Q_3,2 by Schur", okamoto_Q_schur(3, 2) == q32)
    bad = []
    for m in range(-window, window + 1):
        for n in range(-window, window + 1):
            q = okamoto_Q(m, n)
            ok = (
                q == okamoto_Q_schur(m, n)
                and q.degree == m * m + n * n - m * n - m
                and q.is_monic()
                and q.has_integer_coeffs()
            )
            if not ok:
                bad.append((m, n))
    rep.add(f"two routes agree, degree, monic, integral on |m|,|n| <= {window}", not bad, f"failures at {bad}" if bad else "")
    qr_bad = [m for m in range(7) if classic_QR(m) != (okamoto_Q(m, 0), okamoto_Q(m + 1, 1))]
    rep.add("one-index Q_m, R_m recurrences match the lattice for m <= 6", not qr_bad, f"failures at {qr_bad}" if qr_bad else "")
    return rep


def hermite_leading_coefficient(m: int, n: int) -> Fraction:
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return Fraction(sign * _sf(m - 1) * _sf(n - 1) * 3 ** ((m + n) * (m + n - 1) // 2))


def suite_hermite(window: int = 4) -> Report:
    rep = Report("generalized Hermite polynomials")
    bad = []
    for m in range(window + 1):
        for n in range(window + 1):
            h = hermite_H(m, n)
            ok = h == hermite_H_schur(m, n) and h.degree == m * n
            ok = ok and h.lead == hermite_leading_coefficient(m, n)
            s_lead = specialize(schur(Partition.rectangle(n, m)), Fraction(1, 6)).lead
            ok = ok and s_lead == Fraction(_sf(m - 1) * _sf(n - 1), _sf(m + n - 1))
            ok = ok and hermite_normalization(m, n) * s_lead == h.lead
            if not ok:
                bad.append((m, n))
    rep.add(f"two routes agree, degree mn, leading coefficients on 0 <= m,n <= {window}", not bad, f"failures at {bad}" if bad else "")
    return rep


def suite_schur() -> Report:
    rep = Report("Schur functions")
    t = ["t1", "t2", "t3", "t4"]
    s211 = schur(Partition((2, 1, 1))).polynomial
    from .algebra import MultiPoly

    want = MultiPoly({(4, 0, 0, 0): Fraction(1, 8), (2, 1, 0, 0): Fraction(-1, 2), (0, 2, 0, 0): Fraction(-1, 2), (0, 0, 0, 1): 1}, 4)
    rep.add("S_(2,1,1) expansion", s211 == want, s211.format(t))
    bad_hook, bad_hom = [], []
    for lam in partitions_up_to(8):
        S = schur(lam).polynomial
        N = max(lam.weight, 1)
        if S.coeff((lam.weight,) + (0,) * (N - 1)) != Fraction(1, lam.hook_product()):
            bad_hook.append(str(lam))
        if S.weighted_degrees(list(range(1, N + 1))) != {lam.weight}:
            bad_hom.append(str(lam))
    rep.add("t1^|lam| coefficient is 1/hook product (|lam| <= 8)", not bad_hook, ", ".join(bad_hook))
    rep.add("weight homogeneity (|lam| <= 8)", not bad_hom, ", ".join(bad_hom))
    bad = [(m, n) for m in range(-3, 4) for n in range(-3, 4) if schur_partial(lambda_mn(m, n), 3) or schur_partial(lambda_mn(m, n), 6)]
    rep.add("d/dt3 and d/dt6 kill S_lambda(m,n) for |m|,|n| <= 3", not bad, f"failures at {bad}" if bad else "")
    return rep


def exp_series(c: Fraction, order: int) -> list[UniPoly]:
    """Coefficients of ``exp(x z + c z^2)`` from ``n e_n = x e_{n-1} + 2 c e_{n-2}``."""
    e = [UniPoly([1]), X]
    for n in range(2, order + 1):
        e.append((X * e[n - 1] + e[n - 2] * (2 * c)) * Fraction(1, n))
    return e[: order + 1]


def suite_genfun(order: int = 10) -> Report:
    rep = Report("generating functions")
    c = Fraction(1, 6)
    rows = exp_series(c, order)
    cols = exp_series(-c, order)
    ok_r = all(specialize(schur(Partition((n,))), c) == rows[n] for n in range(order + 1))
    ok_c = all(specialize(schur(Partition((1,) * m)), c) == cols[m] for m in range(order + 1))
    rep.add(f"sum S_(n)(x,1/6) z^n = exp(xz + z^2/6) through z^{order}", ok_r)
    rep.add(f"sum S_(1^m)(x,1/6) z^m = exp(xz - z^2/6) through z^{order}", ok_c)
    return rep


def _same(a: SignedPartition, b: SignedPartition) -> bool:
    return a == b


def suite_vertex(kp_weight: int = 6, mkp_weight: int = 5) -> Report:
    rep = Report("vertex operators and KP")
    bad = []
    for lam in partitions_up_to(5):
        for k in range(-3, 6):
            for l in range(-3, 6):
                lhs = vertex_apply(k, vertex_apply(l, lam))
                rhs = -vertex_apply(l - 1, vertex_apply(k + 1, lam))
                if not _same(lhs, rhs):
                    bad.append((k, l, str(lam)))
    rep.add("X_k X_l = -X_{l-1} X_{k+1} (|lam| <= 5, -3 <= k,l <= 5)", not bad, str(bad[:3]))
    bad = [str(lam) for lam in partitions_up_to(8) if vertex_apply_chain(lam.parts) != SignedPartition.of(lam)]
    rep.add("X_lam1 ... X_laml . 1 = S_lam (|lam| <= 8)", not bad, ", ".join(bad))
    bad = []
    for m in range(-3, 4):
        for n in range(-3, 4):
            L = lambda_mn
            steps = [
                (2 * m - n, L(m, n), L(m + 1, n)),
                (2 * n - m, L(m + 1, n), L(m + 1, n + 1)),
                (-m - n, L(m + 1, n + 1), L(m, n)),
                (2 * n - m + 1, L(m, n), L(m, n + 1)),
                (2 * m - n - 1, L(m, n + 1), L(m + 1, n + 1)),
            ]
            for k, src, dst in steps:
                r = vertex_apply(k, src)
                if r.is_zero() or r.partition != dst:
                    bad.append((m, n, k))
    rep.add("cyclic vertex relations among lambda(m,n) (|m|,|n| <= 3)", not bad, str(bad[:3]))
    bad = []
    for lam in partitions_up_to(kp_weight):
        S = schur(lam, max(lam.weight, 3)).polynomial
        if not hirota_multi(KP_OPERATOR, S, S).is_zero():
            bad.append(str(lam))
    rep.add(f"KP bilinear equation for S_lam (|lam| <= {kp_weight})", not bad, ", ".join(bad))
    bad = []
    for lam in partitions_up_to(mkp_weight):
        for k in range(-2, 5):
            img = vertex_apply(k, lam)
            if img.is_zero():
                continue
            N = max(lam.weight, img.partition.weight, 2)
            A = schur(lam, N).polynomial
            B = img.to_multipoly(N)
            if not hirota_multi(MKP_OPERATOR, A, B).is_zero():
                bad.append((str(lam), k))
    rep.add(f"first modified KP equation for (S_lam, X_k S_lam) (|lam| <= {mkp_weight})", not bad, str(bad[:3]))
    return rep


def suite_weyl() -> Report:
    return weyl_relations_check(depth=1)


def suite_symbolic() -> Report:
    rep = Report("differential-field identities")
    rep.checks.append(check_thm1_ode())
    rep.extend(check_F2_identity())
    rep.checks.append(check_hamiltonian())
    return rep


def suite_solutions() -> Report:
    rep = Report("rational solutions")
    s = apply_word_to_solution("s1 s0", SEED_A)
    x = X
    want_f = (
        (x * x + 1, x),
        (x * (x * x - 1), x * x + 1),
        (x ** 4 + 2 * x * x - 1, x * (x * x + 1)),
    )
    from .algebra import UniRatFunc

    ok = s.alphas == (-2, 1, 4) and all(fi == UniRatFunc(n, d) for fi, (n, d) in zip(s.f, want_f))
    rep.add("s1 s0 applied to (1,1,1; x,x,x)", ok, str(s))
    rep.add("transformed solution satisfies the system", verify_solution(s).passed)
    rep.add("lattice triple at (-1,-1) gives the same solution", f_triple("okamoto", -1, -1) == s)
    for fam, seed in (("okamoto", "(1,1,1; x,x,x)"), ("hermite", "(3,0,0; 3x,0,0)")):
        rep.add(f"{fam} seed triple is {seed}", str(f_triple(fam, 0, 0)).replace("*", "").replace(" ", "") == seed.replace(" ", ""))
    return rep


def suite_tau(window: int = 3) -> Report:
    rep = Report("tau identities")
    rep.extend(tau_identities_check("okamoto", window))
    rep.extend(tau_identities_check("hermite", window))
    return rep


SUITES: dict[str, Callable[[], Report]] = {
    "seeds": suite_seeds,
    "okamoto": suite_okamoto,
    "hermite": suite_hermite,
    "schur": suite_schur,
    "genfun": suite_genfun,
    "vertex": suite_vertex,
    "weyl": suite_weyl,
    "symbolic": suite_symbolic,
    "solutions": suite_solutions,
    "tau": suite_tau,
}


def run_suite(name: str) -> Report:
    if name == "all":
        rep = Report("all")
        for fn in SUITES.values():
            rep.extend(fn())
        return rep
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
