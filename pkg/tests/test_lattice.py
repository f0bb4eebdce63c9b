import json
import subprocess
import sys
from fractions import Fraction

import pytest
import sympy as sp

from painleve4.algebra import ONE, X, D, GaugedFn, NonDivisibleError, UniPoly, UniRatFunc, exact_divide, hirota_apply
from painleve4.algebra.serialize import gauged_from_dict
from painleve4.checks import OutOfRegionError
from painleve4.lattice import (
    HALF,
    backlund_tau,
    classic_QR,
    f_from_log_derivatives,
    f_triple,
    hermite_H,
    hermite_H_schur,
    lattice_params,
    lattice_rows,
    okamoto_Q,
    okamoto_Q_schur,
    tau_at,
    tau_identities_check,
    toda_operator,
)
from painleve4.painleve import SolutionTriple, verify_solution
from painleve4.partitions import Partition
from painleve4.schur import hermite_normalization, specialize, schur, superfactorial

from oracles import schur_oracle, uni_to_sympy, x

WINDOW = range(-4, 5)


def P(*coeffs):
    return UniPoly(coeffs)


# -- Okamoto ------------------------------------------------------------------------

def test_okamoto_examples():
    assert okamoto_Q(3, 2) == P(-1, 0, -2, 0, 1)
    assert okamoto_Q(0, 0) == ONE
    assert okamoto_Q(2, 0) == P(1, 0, 1)
    assert okamoto_Q_schur(3, 2) == P(-1, 0, -2, 0, 1)
    assert okamoto_Q_schur(1, 1) == ONE


def test_seeds():
    assert [okamoto_Q(*c) for c in ((0, 0), (1, 0), (1, 1))] == [ONE] * 3
    assert okamoto_Q(2, 1) == X
    assert [hermite_H(*c) for c in ((0, 0), (1, 0), (0, 1))] == [ONE] * 3
    assert hermite_H(1, 1) == X * 3


@pytest.mark.parametrize("m", WINDOW)
def test_okamoto_two_routes(m):
    for n in WINDOW:
        q = okamoto_Q(m, n)
        assert q == okamoto_Q_schur(m, n)
        assert q.degree == m * m + n * n - m * n - m
        assert q.is_monic() and q.has_integer_coeffs()


@pytest.mark.parametrize("cell", [(2, 0), (0, 1), (-1, 0), (2, 1)])
def test_first_call_in_fresh_process(cell):
    # cells inside the seed hull that are not seeds must be computed on an empty cache
    code = f"from painleve4.lattice import okamoto_Q, okamoto_Q_schur; assert okamoto_Q{cell} == okamoto_Q_schur{cell}"
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr


def test_okamoto_schur_route_against_sympy():
    # Q_{3,2} = 8 S_(2,1,1)(x, 1/2, 0, 0) with the determinant taken by sympy
    t = sp.symbols("t1:5")
    S = schur_oracle((2, 1, 1), 4).subs({t[0]: x, t[1]: sp.Rational(1, 2), t[2]: 0, t[3]: 0})
    assert sp.expand(8 * S - uni_to_sympy(okamoto_Q(3, 2))) == 0


def test_classic_sequences():
    assert classic_QR(0) == (ONE, ONE) and classic_QR(1) == (ONE, X)
    assert classic_QR(2) == (P(1, 0, 1), P(-1, 0, 2, 0, 1))
    for m in range(7):
        assert classic_QR(m) == (okamoto_Q(m, 0), okamoto_Q(m + 1, 1))


def test_toda_step_divisibility_is_sharp():
    # mutation control: a wrong seed makes the Toda step non-divisible
    op = toda_operator(0, 2, 1)
    assert exact_divide(hirota_apply(op, X, X), okamoto_Q(1, 1)) == okamoto_Q(3, 1)
    with pytest.raises(NonDivisibleError):
        exact_divide(hirota_apply(op, X + 1, X + 1), X * X + 2)


# -- Hermite --------------------------------------------------------------------------

def test_hermite_examples():
    assert hermite_H(2, 1) == P(-9, 0, 27)
    assert hermite_H(2, 2) == P(-243, 0, 0, 0, -729)
    assert hermite_H(3, 1) == P(0, -1458, 0, 1458)
    assert hermite_H_schur(1, 1) == X * 3


@pytest.mark.parametrize("m", range(7))
def test_hermite_one_index_edges_are_constants(m):
    # S of an empty rectangle is 1, so H_{m,0} and H_{0,m} are the constants C_{m,0}, C_{0,m}
    assert hermite_H(m, 0) == UniPoly([hermite_normalization(m, 0)])
    assert hermite_H(0, m) == UniPoly([hermite_normalization(0, m)])
    assert hermite_H_schur(m, 0) == hermite_H(m, 0)


@pytest.mark.parametrize("m", range(5))
def test_hermite_two_routes(m):
    for n in range(5):
        h = hermite_H(m, n)
        assert h == hermite_H_schur(m, n)
        assert h.degree == m * n


def hermite_lead(m, n):
    sign = (-1) ** (n * (n - 1) // 2)
    return sign * superfactorial(m - 1) * superfactorial(n - 1) * 3 ** ((m + n) * (m + n - 1) // 2)


def test_three_power_in_leading_coefficients_small_cases():
    # brute force first: lead(H) = C * lead(S) at (1,1), (2,1), (2,2)
    for m, n in ((1, 1), (2, 1), (2, 2)):
        s_lead = specialize(schur(Partition.rectangle(n, m)), Fraction(1, 6)).lead
        assert hermite_H(m, n).lead == hermite_normalization(m, n) * s_lead
        assert s_lead == Fraction(1, Partition.rectangle(n, m).hook_product())
    assert [hermite_H(*c).lead for c in ((1, 1), (2, 1), (2, 2))] == [3, 27, -729]


@pytest.mark.parametrize("m", range(5))
def test_hermite_leading_coefficient(m):
    for n in range(5):
        assert hermite_H(m, n).lead == hermite_lead(m, n)
        s_lead = specialize(schur(Partition.rectangle(n, m)), Fraction(1, 6)).lead
        assert s_lead == Fraction(superfactorial(m - 1) * superfactorial(n - 1), superfactorial(m + n - 1))


def test_hermite_region():
    with pytest.raises(OutOfRegionError):
        hermite_H(-1, 2)
    with pytest.raises(OutOfRegionError):
        tau_at("hermite", 0, 1)
    assert tau_at("hermite", 1, 0) == GaugedFn(1, 1, ONE)
    assert tau_at("okamoto", 0, 0) == GaugedFn.plain(ONE)
    assert tau_at("hermite", 3, 1) == GaugedFn(1, 1, hermite_H(2, 1))


# -- parameters and f-variables --------------------------------------------------------

def test_lattice_param_examples():
    assert lattice_params(0, 0) == (1, 1, 1)
    assert lattice_params(1, 0) == (4, -2, 1)
    assert lattice_params(0, 0, "second") == (2, -1, 2)
    with pytest.raises(ValueError):
        lattice_params(0, 0, "third")


def test_f_triple_examples():
    s = f_triple("okamoto", 0, 0)
    assert s == SolutionTriple((X, X, X), (1, 1, 1))
    ratsol2 = SolutionTriple(
        (UniRatFunc(X * X + 1, X), UniRatFunc(X * (X * X - 1), X * X + 1), UniRatFunc(P(-1, 0, 2, 0, 1), X * (X * X + 1))),
        (-2, 1, 4),
    )
    assert f_triple("okamoto", -1, -1) == ratsol2
    assert f_triple("hermite", 0, 0) == SolutionTriple((X * 3, 0, 0), (3, 0, 0))
    with pytest.raises(OutOfRegionError):
        f_triple("hermite", 0, 1)


@pytest.mark.parametrize("kind", ["first", "second"])
def test_every_okamoto_triple_solves_the_system(kind):
    for m in range(-3, 4):
        for n in range(-3, 4):
            s = f_triple("okamoto", m, n, kind)
            assert verify_solution(s).passed
            assert s.alphas == lattice_params(m, n, kind)


def test_hermite_triples_solve_the_system():
    for m in range(0, 5):
        for n in range(0, m + 1):
            s = f_triple("hermite", m, n)
            assert verify_solution(s).passed
            assert s.alphas == lattice_params(m, n, "first", (3, 0, 0))


def test_backlund_images_of_examples():
    one = GaugedFn.plain(ONE)
    assert backlund_tau(one, one, one) == (GaugedFn.plain(X),) * 3
    t = tuple(GaugedFn.plain(p) for p in (P(1, 0, 1), X, ONE))
    imgs = backlund_tau(*t)
    assert imgs == tuple(GaugedFn.plain(p) for p in (ONE, P(-1, 0, 1), P(-1, 0, 2, 0, 1)))
    assert f_from_log_derivatives(*t) == f_triple("okamoto", -1, -1).f


def test_gauge_enters_log_derivative():
    t = [tau_at("hermite", *c) for c in ((0, 0), (1, 0), (1, 1))]
    assert f_from_log_derivatives(*t) == (UniRatFunc(X * 3), UniRatFunc(0), UniRatFunc(0))


# -- identity suites --------------------------------------------------------------------

@pytest.mark.parametrize("family", ["okamoto", "hermite"])
def test_tau_identities(family):
    rep = tau_identities_check(family, 3)
    assert rep.passed, [c.line() for c in rep.failures()]
    assert len(rep) == (11 if family == "okamoto" else 9)


def test_lattice_rows_round_trip():
    rows = json.loads(json.dumps(lattice_rows("hermite", 3)))
    assert {(r["m"], r["n"]) for r in rows} == {(m, n) for m in range(4) for n in range(m + 1)}
    for r in rows:
        assert gauged_from_dict(r) == tau_at("hermite", r["m"], r["n"])
    okam = lattice_rows("okamoto", 1)
    assert len(okam) == 9 and all(r["eps"] == 0 and r["a"] == "0" for r in okam)


def test_toda_operator_shapes():
    # first Toda equation at (1,0) gives Q_{2,0} Q_{0,0} = x^2 + 1
    assert hirota_apply(toda_operator(0, 1, 0), ONE, ONE) == P(1, 0, 1)
    assert hirota_apply(HALF * D(2) + X * X + 2, X, X) == P(-1, 0, 2, 0, 1)
