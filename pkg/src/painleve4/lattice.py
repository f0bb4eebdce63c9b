"""tau-functions on the A2 lattice for the two rational seed families.

Okamoto family: ``tau_{m,n} = Q_{m,n}``, defined on all of Z^2, seeded by
``Q_{0,0} = Q_{1,0} = Q_{1,1} = 1, Q_{2,1} = x`` and grown with the three Toda
equations and the three ``(D + x)`` bilinear equations.  Every relation whose
four cells are known is used as a cross-check.

Hermite family: ``tau_{m,n} = exp(-x^4/12 + (m - 2n) x^2/2) H_{m-n,n}`` for
``m >= n >= 0``; ``H`` grows by its two Toda equations.  The cells on the
boundary lines ``n = -1`` and ``m = n - 1`` vanish.  They are used internally
(for instance, the seed solution ``(3x, 0, 0)`` has two zero f-variables), but
the public accessors refuse them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    ONE,
    X,
    ZERO,
    BilinearOp,
    D,
    GaugedFn,
    UniPoly,
    UniRatFunc,
    exact_divide,
    hirota_apply,
    hirota_apply_gauged,
)
from .algebra.serialize import gauged_to_dict
from .checks import OutOfRegionError, Report
from .painleve import SolutionTriple, params_from_degrees, verify_solution
from .partitions import Partition, lambda_mn
from .schur import hermite_normalization, okamoto_normalization, specialized_schur

OKAMOTO = "okamoto"
HERMITE = "hermite"
FAMILIES = (OKAMOTO, HERMITE)
BASE_ALPHA = {OKAMOTO: (Fraction(1), Fraction(1), Fraction(1)), HERMITE: (Fraction(3), Fraction(0), Fraction(0))}

HALF = Fraction(1, 2)
DX = D(1) + X  # D_x + x


def _family(name: str) -> str:
    key = name.strip().lower()
    aliases = {"a": OKAMOTO, "okamoto": OKAMOTO, "b": HERMITE, "hermite": HERMITE}
    if key not in aliases:
        raise ValueError(f"unknown family {name!r} (expected okamoto or hermite)")
    return aliases[key]


# -- relations on the tau lattice -------------------------------------------------

def toda_operator(direction: int, m: int, n: int, alpha=(1, 1, 1)) -> BilinearOp:
    """Toda operator at ``(m, n)`` for direction 0: (1,0), 1: (0,1), 2: (1,1)."""
    a0, a1, a2 = (Fraction(a) for a in alpha)
    if direction == 0:
        c = -(2 * a1 + a2) / 3 + 2 * m - n
    elif direction == 1:
        c = (a1 - a2) / 3 - m + 2 * n
    else:
        c = (a1 + 2 * a2) / 3 - m - n
    return HALF * D(2) + X * X + c


TODA_STEPS = ((1, 0), (0, 1), (1, 1))


@dataclass(frozen=True)
class Relation:
    """``P(D) tau_A . tau_B = tau_C tau_E`` for one anchor cell."""

    name: str
    op: BilinearOp
    lhs: tuple[tuple[int, int], tuple[int, int]]
    rhs: tuple[tuple[int, int], tuple[int, int]]

    def cells(self):
        return self.lhs + self.rhs


def okamoto_relations(m: int, n: int, alpha=(1, 1, 1)) -> list[Relation]:
    """All Toda and bilinear relations anchored at ``(m, n)``."""
    rels = []
    for k, (dm, dn) in enumerate(TODA_STEPS):
        rels.append(Relation(f"Toda{k + 1}", toda_operator(k, m, n, alpha), ((m, n), (m, n)), ((m + dm, n + dn), (m - dm, n - dn))))
    rels.append(Relation("B1", DX, ((m, n), (m + 1, n)), ((m, n - 1), (m + 1, n + 1))))
    rels.append(Relation("B2", DX, ((m, n), (m, n + 1)), ((m + 1, n + 1), (m - 1, n))))
    rels.append(Relation("B3", DX, ((m, n), (m - 1, n - 1)), ((m - 1, n), (m, n - 1))))
    return rels


class RouteMismatchError(AssertionError):
    """Two recurrence routes produced different values for one cell."""


@dataclass
class TauLattice:
    """Table ``(m, n) -> GaugedFn`` grown from seeds by exact recurrences."""

    family: str
    table: dict = field(default_factory=dict)
    seeds: dict = field(default_factory=dict)
    crosschecks: int = 0

    def __getitem__(self, mn):
        return self.table[mn]

    def __contains__(self, mn):
        return mn in self.table


# Okamoto ---------------------------------------------------------------------

_OKA = TauLattice(OKAMOTO)
_OKA.seeds = {(0, 0): ONE, (1, 0): ONE, (1, 1): ONE, (2, 1): X}
_OKA.table.update(_OKA.seeds)
_OKA_BOX: list = []  # m_lo, m_hi, n_lo, n_hi already filled; empty until the first fill


def _apply(op: BilinearOp, table, lhs) -> UniPoly:
    return hirota_apply(op, table[lhs[0]], table[lhs[1]])


def _fill_okamoto_box(m_lo, m_hi, n_lo, n_hi):
    """Fill every cell of the box; relations may only reference cells inside it."""
    table = _OKA.table
    inside = lambda c: m_lo <= c[0] <= m_hi and n_lo <= c[1] <= n_hi
    rels = [r for m in range(m_lo, m_hi + 1) for n in range(n_lo, n_hi + 1) for r in okamoto_relations(m, n) if all(inside(c) for c in r.cells())]
    by_cell: dict = {}
    for r in rels:
        for c in r.cells():
            by_cell.setdefault(c, []).append(r)
    queue = deque(rels)
    while queue:
        r = queue.popleft()
        if not all(c in table for c in r.lhs):
            continue
        c1, c2 = r.rhs
        have1, have2 = c1 in table, c2 in table
        if have1 == have2:
            continue
        known, unknown = (c1, c2) if have1 else (c2, c1)
        if table[known].is_zero():
            continue
        table[unknown] = exact_divide(_apply(r.op, table, r.lhs), table[known])
        queue.extend(by_cell.get(unknown, ()))
    missing = [(m, n) for m in range(m_lo, m_hi + 1) for n in range(n_lo, n_hi + 1) if (m, n) not in table]
    if missing:
        raise RuntimeError(f"lattice filling stalled; missing cells {missing[:5]}")
    # every relation whose cells are all known doubles as a route-independence check
    for r in rels:
        lhs = _apply(r.op, table, r.lhs)
        if lhs != table[r.rhs[0]] * table[r.rhs[1]]:
            raise RouteMismatchError(f"{r.name} fails at anchor {r.lhs[0]}")
        _OKA.crosschecks += 1


def ensure_okamoto(m_lo: int, m_hi: int, n_lo: int, n_hi: int) -> TauLattice:
    """Make sure the Okamoto table covers the given box (plus the seeds)."""
    box = _OKA_BOX or [0, 2, 0, 1]  # the seed hull is not filled yet, so it is merged in
    new = [min(box[0], m_lo), max(box[1], m_hi), min(box[2], n_lo), max(box[3], n_hi)]
    if new != _OKA_BOX:
        _fill_okamoto_box(*new)
        _OKA_BOX[:] = new
    return _OKA


def okamoto_Q(m: int, n: int) -> UniPoly:
    """Okamoto polynomial ``Q_{m,n}`` via the Toda / bilinear recurrences."""
    if (m, n) not in _OKA.table:
        ensure_okamoto(m, m, n, n)
    return _OKA.table[(m, n)]


def okamoto_lattice() -> TauLattice:
    return _OKA


def okamoto_Q_schur(m: int, n: int) -> UniPoly:
    """``Q_{m,n} = N_{m,n} S_{lambda(m,n)}(x, 1/2, 0, 0, ...)``."""
    return specialized_schur(lambda_mn(m, n), HALF) * okamoto_normalization(m, n)


@lru_cache(maxsize=None)
def classic_QR(m: int) -> tuple[UniPoly, UniPoly]:
    """One-index Okamoto sequences ``(Q_m, R_m)`` from their own Toda recurrences."""
    if m < 0:
        raise ValueError("classic_QR is defined here for m >= 0")
    Q = [ONE, ONE]
    R = [ONE, X]
    for k in range(1, m):
        Q.append(exact_divide(hirota_apply(HALF * D(2) + X * X + (2 * k - 1), Q[k], Q[k]), Q[k - 1]))
        R.append(exact_divide(hirota_apply(HALF * D(2) + X * X + 2 * k, R[k], R[k]), R[k - 1]))
    return Q[m], R[m]


# Hermite ----------------------------------------------------------------------

_HER: dict = {(0, 0): ONE, (1, 0): ONE, (0, 1): ONE, (1, 1): X * 3}
_HER_SEEDS = dict(_HER)
_HER_N = [1]  # table covers 0 <= m, n <= _HER_N[0]
_HER_CROSS = [0]


def _her_get(m, n):
    if m == -1 or n == -1:
        return ZERO
    return _HER[(m, n)]


def _her_toda(direction: int, m: int, n: int) -> UniPoly:
    c = 3 * m if direction == 0 else -3 * n
    F = _HER[(m, n)]
    return hirota_apply(HALF * D(2) + c, F, F)


def _fill_hermite(N: int):
    for s in range(2, 2 * N + 1):
        for m in range(max(0, s - N), min(N, s) + 1):
            n = s - m
            if (m, n) in _HER:
                continue
            routes = []
            if m >= 1 and not _her_get(m - 2, n).is_zero():
                routes.append(exact_divide(_her_toda(0, m - 1, n), _her_get(m - 2, n)))
            if n >= 1 and not _her_get(m, n - 2).is_zero():
                routes.append(exact_divide(_her_toda(1, m, n - 1), _her_get(m, n - 2)))
            if not routes:
                raise RuntimeError(f"no Toda route reaches H_{m},{n}")
            for other in routes[1:]:
                if other != routes[0]:
                    raise RouteMismatchError(f"Toda routes disagree at H_{m},{n}")
                _HER_CROSS[0] += 1
            _HER[(m, n)] = routes[0]


def hermite_H(m: int, n: int) -> UniPoly:
    """Generalized Hermite polynomial ``H_{m,n}`` (``m, n >= 0``) via Toda equations."""
    if m < 0 or n < 0:
        raise OutOfRegionError(f"H_{{m,n}} is defined for m, n >= 0, got ({m}, {n})")
    if (m, n) not in _HER:
        N = max(m, n, _HER_N[0])
        _fill_hermite(N)
        _HER_N[0] = N
    return _HER[(m, n)]


def hermite_H_schur(m: int, n: int) -> UniPoly:
    """``H_{m,n} = C_{m,n} S_{(n^m)}(x, 1/6, 0, 0, ...)``."""
    if m < 0 or n < 0:
        raise OutOfRegionError(f"H_{{m,n}} is defined for m, n >= 0, got ({m}, {n})")
    return specialized_schur(Partition.rectangle(n, m), Fraction(1, 6)) * hermite_normalization(m, n)


# Uniform access ----------------------------------------------------------------

def _hermite_cell(m: int, n: int, boundary: bool) -> GaugedFn:
    if m >= n >= 0:
        return GaugedFn(1, Fraction(m - 2 * n), hermite_H(m - n, n))
    if boundary and (n == -1 and m >= -1 or m == n - 1 and n >= 0):
        return GaugedFn.zero()
    raise OutOfRegionError(f"Hermite tau_{{m,n}} is defined for m >= n >= 0, got ({m}, {n})")


def tau_at(family: str, m: int, n: int) -> GaugedFn:
    """Gauged tau-function of the lattice (Hermite needs ``m >= n >= 0``)."""
    fam = _family(family)
    if fam == OKAMOTO:
        return GaugedFn.plain(okamoto_Q(m, n))
    return _hermite_cell(m, n, boundary=False)


def _cell(fam: str, m: int, n: int) -> GaugedFn:
    """Like :func:`tau_at` but admitting the vanishing Hermite boundary cells."""
    if fam == OKAMOTO:
        return GaugedFn.plain(okamoto_Q(m, n))
    return _hermite_cell(m, n, boundary=True)


def cell_defined(fam: str, m: int, n: int) -> bool:
    if fam == OKAMOTO:
        return True
    return (m >= n >= 0) or (n == -1 and m >= -1) or (m == n - 1 and n >= 0)


# -- parameters and f-variables ----------------------------------------------------

FIRST, SECOND = "first", "second"


def lattice_params(m: int, n: int, kind: str = FIRST, base=(1, 1, 1)) -> tuple[Fraction, Fraction, Fraction]:
    a0, a1, a2 = (Fraction(a) for a in base)
    if kind == FIRST:
        return (a0 + 3 * m, a1 + 3 * (n - m), a2 - 3 * n)
    if kind == SECOND:
        return (a0 + a1 + 3 * n, -a1 + 3 * (m - n), a1 + a2 - 3 * m)
    raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")


def triple_cells(m: int, n: int, kind: str = FIRST):
    """Cells of the tau triple and of its three neighbours ``s_i(tau_i)``."""
    if kind == FIRST:
        return ((m, n), (m + 1, n), (m + 1, n + 1)), ((m + 2, n + 1), (m, n + 1), (m, n - 1))
    if kind == SECOND:
        return ((m, n), (m, n + 1), (m + 1, n + 1)), ((m + 1, n + 2), (m + 1, n), (m - 1, n))
    raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")


def _ratio(num: list[GaugedFn], den: list[GaugedFn]) -> UniRatFunc:
    if any(d.is_zero() for d in den):
        raise OutOfRegionError("a tau-function in the denominator vanishes")
    if any(t.is_zero() for t in num):
        return UniRatFunc(ZERO)
    eps = sum(t.eps for t in num) - sum(t.eps for t in den)
    a = sum(t.a for t in num) - sum(t.a for t in den)
    if eps or a:
        raise ValueError("tau ratio carries a non-trivial gauge factor")
    pn, pd = ONE, ONE
    for t in num:
        pn = pn * t.u
    for t in den:
        pd = pd * t.u
    return UniRatFunc(pn, pd)


def f_triple(family: str, m: int, n: int, kind: str = FIRST) -> SolutionTriple:
    """Rational solution attached to the lattice triple at ``(m, n)``."""
    fam = _family(family)
    (c0, c1, c2), (s0, s1, s2) = triple_cells(m, n, kind)
    if fam == HERMITE:
        for c in (c0, c1, c2):
            _hermite_cell(*c, boundary=False)
    t = [_cell(fam, *c) for c in (c0, c1, c2)]
    s = [_cell(fam, *c) for c in (s0, s1, s2)]
    f = tuple(_ratio([t[i], s[i]], [t[(i + 1) % 3], t[(i + 2) % 3]]) for i in range(3))
    return SolutionTriple(f, lattice_params(m, n, kind, BASE_ALPHA[fam]))


def f_from_log_derivatives(t0: GaugedFn, t1: GaugedFn, t2: GaugedFn) -> tuple[UniRatFunc, ...]:
    """``f_i = (log tau_{i+1})' - (log tau_{i+2})' + x``, gauge included."""
    taus = (t0, t1, t2)
    if any(t.is_zero() for t in taus):
        raise OutOfRegionError("log-derivative of a vanishing tau-function")
    logd = [UniRatFunc(t.u.derivative(), t.u) + t.log_derivative() for t in taus]
    return tuple(logd[(i + 1) % 3] - logd[(i + 2) % 3] + X for i in range(3))


# -- identity suite ------------------------------------------------------------------

def p4tau_operators(alpha) -> list[BilinearOp]:
    a = [Fraction(t) for t in alpha]
    return [D(2) - X * D(1) - (a[i] - a[(i + 1) % 3]) / 3 for i in range(3)]


def backlund_tau(t0: GaugedFn, t1: GaugedFn, t2: GaugedFn) -> tuple[GaugedFn, ...]:
    """``s_i(tau_i) = (D_x + x) tau_{i+1} . tau_{i+2} / tau_i``."""
    taus = (t0, t1, t2)
    out = []
    for i in range(3):
        num = hirota_apply_gauged(DX, taus[(i + 1) % 3], taus[(i + 2) % 3])
        out.append(num.exact_div(taus[i]))
    return tuple(out)


def _window_cells(fam: str, window: int):
    if fam == OKAMOTO:
        return [(m, n) for m in range(-window, window + 1) for n in range(-window, window + 1)]
    return [(m, n) for m in range(0, window + 1) for n in range(0, window + 1) if m >= n]


def tau_identities_check(family: str, window: int = 3) -> Report:
    """Every tau identity over the window.

    Okamoto: triples anchored at ``|m|, |n| <= window``.  Hermite: anchors with
    ``window >= m >= n >= 0`` whose tau triple lies in the region.
    """
    fam = _family(family)
    rep = Report(f"tau identities ({fam}, window {window})")
    base = BASE_ALPHA[fam]
    if fam == OKAMOTO:
        ensure_okamoto(-window - 2, window + 2, -window - 2, window + 2)
    counts: dict[str, list[int]] = {}

    def tally(name, ok, where):
        c = counts.setdefault(name, [0, 0])
        c[0] += 1
        if not ok:
            c[1] += 1
            rep.add(f"{name} at {where}", False)

    for (m, n) in _window_cells(fam, window):
        for kind in (FIRST, SECOND):
            tcells, scells = triple_cells(m, n, kind)
            if not all(cell_defined(fam, *c) for c in tcells + scells):
                continue
            t = [_cell(fam, *c) for c in tcells]
            s_pred = [_cell(fam, *c) for c in scells]
            alpha = lattice_params(m, n, kind, base)
            where = f"({m},{n}) {kind}"
            for i, op in enumerate(p4tau_operators(alpha)):
                lhs = hirota_apply_gauged(op, t[i], t[(i + 1) % 3])
                tally("bilinear P_IV system", lhs.is_zero(), where)
            if any(x.is_zero() for x in t):
                continue
            s_img = backlund_tau(*t)
            for i in range(3):
                tally("Backlund image is the neighbour cell", s_img[i] == s_pred[i], f"{where} i={i}")
            sol = f_triple(fam, m, n, kind)
            tally("f-triple solves the system", verify_solution(sol).passed, where)
            logf = f_from_log_derivatives(*t)
            tally("multiplicative f equals log-derivative f", all(a == b for a, b in zip(sol.f, logf)), where)
            lhs = t[0] * t[0] * s_img[0] + t[1] * t[1] * s_img[1] + t[2] * t[2] * s_img[2]
            rhs = t[0] * t[1] * t[2] * X * 3
            tally("3x tau0 tau1 tau2 identity", lhs == rhs, where)
            # Toda type obtained from the triple itself
            for i in range(3):
                j, k = (i + 1) % 3, (i + 2) % 3
                op = HALF * D(2) + X * X + (alpha[j] - alpha[k]) / 3
                ok = hirota_apply_gauged(op, t[i], t[i]) == s_img[j] * s_img[k]
                tally("Toda equation of the triple", ok, f"{where} i={i}")
        # lattice Toda and (D+x) equations anchored at (m, n)
        for r in okamoto_relations(m, n, base):
            if not all(cell_defined(fam, *c) for c in r.cells()):
                continue
            A, B = (_cell(fam, *c) for c in r.lhs)
            C, E = (_cell(fam, *c) for c in r.rhs)
            ok = hirota_apply_gauged(r.op, A, B) == C * E
            tally("lattice Toda equations" if r.name.startswith("Toda") else "lattice (D+x) equations", ok, f"{r.name} ({m},{n})")
    if fam == OKAMOTO:
        for (m, n) in _window_cells(fam, window):
            tally("Schur triples (first)", _schur_triple_ok(m, n, FIRST), (m, n))
            tally("Schur triples (second)", _schur_triple_ok(m, n, SECOND), (m, n))
            degs = [okamoto_Q(*c).degree for c in triple_cells(m, n, FIRST)[0]]
            tally("parameters from degrees", params_from_degrees(degs) == lattice_params(m, n, FIRST), (m, n))
    else:
        for m in range(0, window + 1):
            for n in range(0, window + 1):
                tally("rescaled rectangle Schur triples", _hermite_u_ok(m, n), (m, n))
    for name, (total, bad) in counts.items():
        if not bad:
            rep.add(name, True, f"{total} instances")
    rep.checks.sort(key=lambda c: c.passed)
    return rep


def _schur_triple_ok(m: int, n: int, kind: str) -> bool:
    cells = triple_cells(m, n, kind)[0]
    s = [GaugedFn.plain(specialized_schur(lambda_mn(*c), HALF)) for c in cells]
    alpha = (3 * m + 1, 3 * (n - m) + 1, -3 * n + 1) if kind == FIRST else (3 * n + 2, 3 * (m - n) - 1, -3 * m + 2)
    return all(hirota_apply_gauged(op, s[i], s[(i + 1) % 3]).is_zero() for i, op in enumerate(p4tau_operators(alpha)))


def hermite_u(m: int, n: int) -> GaugedFn:
    """``exp(-x^4/12 + (m - n) x^2/2) S_{(n^m)}(x, 1/6, 0, ...)``."""
    return GaugedFn(1, Fraction(m - n), specialized_schur(Partition.rectangle(n, m), Fraction(1, 6)))


def _hermite_u_ok(m: int, n: int) -> bool:
    u, u_m, u_n = hermite_u(m, n), hermite_u(m + 1, n), hermite_u(m, n + 1)
    ok = all(
        hirota_apply_gauged(op, A, B).is_zero()
        for op, A, B in (
            (D(2) - X * D(1) + (m + 2 * n + 1), u_n, u),
            (D(2) - X * D(1) + (m - n), u_m, u_n),
            (D(2) - X * D(1) - (2 * m + n + 1), u, u_m),
        )
    )
    alpha = (3 * (m + n + 1), -3 * m, -3 * n)
    trip = (u, u_m, u_n)
    ok = ok and all(hirota_apply_gauged(op, trip[i], trip[(i + 1) % 3]).is_zero() for i, op in enumerate(p4tau_operators(alpha)))
    # tau_{m+n, n} is a constant multiple of u_{m,n}
    tau = _hermite_cell(m + n, n, boundary=False)
    return ok and tau.same_gauge(u) and tau.u == u.u * hermite_normalization(m, n)


def lattice_rows(family: str, window: int) -> list[dict]:
    """JSON-ready rows ``{family, m, n, eps, a, coeffs}`` for every defined cell
    with ``|m|, |n| <= window`` (Hermite: ``m >= n >= 0``)."""
    fam = _family(family)
    rows = []
    for m in range(-window, window + 1):
        for n in range(-window, window + 1):
            if fam == HERMITE and not m >= n >= 0:
                continue
            rows.append({"family": fam, "m": m, "n": n, **gauged_to_dict(tau_at(fam, m, n))})
    return rows
