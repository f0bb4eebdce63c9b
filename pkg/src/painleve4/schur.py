"""Schur functions, their specializations and the vertex-operator action.

Schur functions are built with the Jacobi-Trudi determinant
``S_lam = det(p_{lam_i - i + j})`` where ``exp(sum t_k z^k) = sum p_n z^n``.
Vertex operators ``X_k`` act on signed partitions through Maya diagrams: add
``k + slots`` to the diagram of ``lam`` (or vanish if already present), with
the sign given by the parity of the members above the new one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .algebra import ONE, ZERO, MultiPoly, UniPoly, exact_divide
from .partitions import Partition, lambda_mn, maya_of_partition, partitions_of


@dataclass(frozen=True)
class SchurValue:
    partition: Partition
    polynomial: MultiPoly

    @property
    def nvars(self) -> int:
        return self.polynomial.nvars


@dataclass(frozen=True)
class SignedPartition:
    """``sign * S_partition``; the zero value has ``sign == 0`` and no partition."""

    sign: int
    partition: Partition | None

    @classmethod
    def zero(cls) -> "SignedPartition":
        return cls(0, None)

    @classmethod
    def of(cls, lam: Partition, sign: int = 1) -> "SignedPartition":
        return cls(sign, lam)

    def is_zero(self) -> bool:
        return self.sign == 0

    def __neg__(self):
        return self if self.is_zero() else SignedPartition(-self.sign, self.partition)

    def to_multipoly(self, nvars: int | None = None) -> MultiPoly:
        if self.is_zero():
            return MultiPoly.const(0, nvars or 1)
        return schur(self.partition, nvars).polynomial * self.sign

    def __str__(self):
        if self.is_zero():
            return "0"
        return ("+" if self.sign > 0 else "-") + str(self.partition)


# -- p_n and Jacobi-Trudi -----------------------------------------------------

@lru_cache(maxsize=None)
def p_poly(n: int, nvars: int) -> MultiPoly:
    """``p_n(t_1..t_N)``; zero for ``n < 0``.  Variables beyond ``nvars`` are set to 0."""
    nv = max(nvars, 1)
    if n < 0:
        return MultiPoly.const(0, nv)
    terms = {}
    for lam in partitions_of(n, max_part=nvars if nvars else 0):
        mult = [0] * nv
        for part in lam:
            mult[part - 1] += 1
        den = 1
        for k in mult:
            den *= factorial(k)
        terms[tuple(mult)] = Fraction(1, den)
    if n == 0:
        terms = {(0,) * nv: Fraction(1)}
    return MultiPoly(terms, nv)


def _laplace_det(matrix: Sequence[Sequence], zero, one):
    """Determinant by first-row Laplace expansion, memoized on column subsets."""
    n = len(matrix)
    if n == 0:
        return one
    memo: dict[tuple[int, int], object] = {}

    def minor(row: int, cols: int):
        # cols: bitmask of available columns, row: first row of the minor
        if row == n:
            return one
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = zero
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                entry = matrix[row][j]
                if not entry.is_zero():
                    sub = minor(row + 1, cols & ~(1 << j))
                    if not sub.is_zero():
                        term = entry * sub
                        acc = acc + term if sign > 0 else acc - term
                sign = -sign
        memo[key] = acc
        return acc

    return minor(0, (1 << n) - 1)


@lru_cache(maxsize=None)
def _schur_cached(lam: Partition, nvars: int) -> MultiPoly:
    l = lam.length
    mat = [[p_poly(lam[i] - i + j, nvars) for j in range(l)] for i in range(l)]
    nv = max(nvars, 1)
    return _laplace_det(mat, MultiPoly.const(0, nv), MultiPoly.const(1, nv))


def schur(lam: Partition, nvars: int | None = None) -> SchurValue:
    """``S_lam(t_1..t_N)`` with ``N = |lam|`` unless given."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    n = lam.weight if nvars is None else nvars
    return SchurValue(lam, _schur_cached(lam, n))


def specialize(S: SchurValue, c) -> UniPoly:
    """Substitute ``t1 = x, t2 = c, t_k = 0 (k >= 3)``."""
    c = Fraction(c)
    values = [UniPoly.x(), UniPoly.const(c)] + [ZERO] * max(S.nvars - 2, 0)
    return S.polynomial.evaluate(values[: max(S.nvars, 1)], one=ONE)


@lru_cache(maxsize=None)
def p_specialized(n: int, c: Fraction) -> UniPoly:
    """``p_n(x, c, 0, 0, ...)``."""
    if n < 0:
        return ZERO
    coeffs = [Fraction(0)] * (n + 1)
    for k2 in range(n // 2 + 1):
        k1 = n - 2 * k2
        coeffs[k1] = c ** k2 / (factorial(k1) * factorial(k2))
    return UniPoly(coeffs)


def bareiss_det(matrix: Sequence[Sequence[UniPoly]]) -> UniPoly:
    """Fraction-free determinant of a square matrix of univariate polynomials."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_divide(m[i][j] * pivot - m[i][k] * m[k][j], prev)
        prev = pivot
    return m[n - 1][n - 1] * sign


@lru_cache(maxsize=None)
def _specialized_schur_cached(lam: Partition, c: Fraction) -> UniPoly:
    l = lam.length
    return bareiss_det([[p_specialized(lam[i] - i + j, c) for j in range(l)] for i in range(l)])


def specialized_schur(lam: Partition, c) -> UniPoly:
    """``S_lam(x, c, 0, 0, ...)`` computed directly from specialized ``p_n``.

    Avoids the full multivariate expansion, so large partitions stay cheap.
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    return _specialized_schur_cached(lam, Fraction(c))


def jacobi_trudi_straighten(seq: Sequence[int]) -> SignedPartition:
    """Rewrite ``det(p_{a_i - i + j})`` for an arbitrary integer row sequence
    ``a`` as ``+-S_mu`` or zero."""
    l = len(seq)
    b = [a - i for i, a in enumerate(seq, 1)]
    if len(set(b)) < l:
        return SignedPartition.zero()
    order = sorted(range(l), key=lambda i: -b[i])
    # parity of the sorting permutation
    sign, seen = 1, [False] * l
    for i in range(l):
        if not seen[i]:
            j, cyc = i, 0
            while not seen[j]:
                seen[j] = True
                j = order[j]
                cyc += 1
            if cyc % 2 == 0:
                sign = -sign
    mu = [b[order[i]] + i + 1 for i in range(l)]
    if l and mu[-1] < 0:
        return SignedPartition.zero()
    return SignedPartition(sign, Partition(mu))


def schur_partial(lam: Partition, k: int) -> dict[Partition, int]:
    """``d S_lam / d t_k`` as a combination of Schur functions.

    Uses ``d p_n / d t_k = p_{n-k}`` row by row in the Jacobi-Trudi
    determinant and straightens each resulting determinant.
    """
    out: dict[Partition, int] = {}
    parts = list(lam.parts)
    for i in range(len(parts)):
        seq = parts[:i] + [parts[i] - k] + parts[i + 1:]
        sp = jacobi_trudi_straighten(seq)
        if not sp.is_zero():
            out[sp.partition] = out.get(sp.partition, 0) + sp.sign
    return {mu: c for mu, c in out.items() if c}


# -- vertex operators -----------------------------------------------------------

def vertex_apply(k: int, lam, slots: int | None = None) -> SignedPartition:
    """``X_k . S_lam`` as a signed partition.

    ``lam`` may be a :class:`Partition` or a :class:`SignedPartition`;
    ``slots`` (default ``l(lam)``) is the number of Maya positions used and
    does not affect the result.
    """
    sign = 1
    if isinstance(lam, SignedPartition):
        if lam.is_zero():
            return lam
        sign, lam = lam.sign, lam.partition
    M = maya_of_partition(lam, slots)
    n = lam.length if slots is None else slots
    pos = k + n
    if pos in M:
        return SignedPartition.zero()
    if M.count_above(pos) % 2:
        sign = -sign
    return SignedPartition(sign, M.add(pos).to_partition())


def vertex_apply_chain(ks: Iterable[int]) -> SignedPartition:
    """``X_{k1} X_{k2} ... X_{kr} . 1`` (rightmost operator first)."""
    ks = list(ks)
    result = SignedPartition.of(Partition())
    for j, k in enumerate(reversed(ks)):
        result = vertex_apply(k, result, slots=j)
        if result.is_zero():
            break
    return result


# -- normalization constants --------------------------------------------------

def superfactorial(n: int) -> int:
    """``n^! = n! (n-1)! ... 1!``, with the empty product 1 for ``n <= 0``."""
    out = 1
    for k in range(2, n + 1):
        out *= factorial(k)
    return out


def okamoto_normalization(m: int, n: int) -> int:
    """Hook product of ``lambda(m, n)``; makes the Okamoto polynomial monic."""
    return lambda_mn(m, n).hook_product()


def hermite_normalization(m: int, n: int) -> Fraction:
    """``(-1)^(n(n-1)/2) 3^((m+n)(m+n-1)/2) (m+n-1)^!`` for ``m, n >= 0``."""
    if m < 0 or n < 0:
        raise ValueError("Hermite indices must be nonnegative")
    s = m + n
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return Fraction(sign * 3 ** (s * (s - 1) // 2) * superfactorial(s - 1))
