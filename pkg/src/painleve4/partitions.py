"""Partitions, Maya diagrams and the 3-reduced partitions lambda(m, n)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts; zeros are dropped on input."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        if any(p < 0 for p in ps) or any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"not a partition: {ps}")
        if 0 in ps:
            raise ValueError(f"zero part inside a partition: {ps}")
        object.__setattr__(self, "parts", ps)

    @classmethod
    def rectangle(cls, width: int, height: int) -> "Partition":
        """The rectangle ``(width^height)``: ``height`` rows of length ``width``."""
        if width < 0 or height < 0:
            raise ValueError("rectangle sides must be nonnegative")
        return cls((width,) * height if width else ())

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"(2,1,1)"``, ``"2 1 1"`` or ``"()"``."""
        body = text.strip()
        if not re.fullmatch(r"\(?\s*(\d+(\s*[, ]\s*\d+)*)?\s*,?\s*\)?", body):
            raise ValueError(f"cannot parse partition from {text!r}")
        return cls(int(t) for t in re.findall(r"\d+", body))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __repr__(self):
        return f"Partition({self})"

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells ``(i, j)``, 1-based row and column."""
        for i, p in enumerate(self.parts, 1):
            for j in range(1, p + 1):
                yield i, j

    def hooks(self) -> list[int]:
        conj = self.conjugate().parts
        return [self.parts[i - 1] + conj[j - 1] - i - j + 1 for i, j in self.cells()]

    def hook_product(self) -> int:
        return prod(self.hooks())

    def is_3_reduced(self) -> bool:
        return all(h % 3 for h in self.hooks())


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def hooks(lam: Partition) -> list[int]:
    return lam.hooks()


def hook_product(lam: Partition) -> int:
    return lam.hook_product()


def is_3_reduced(lam: Partition) -> bool:
    return lam.is_3_reduced()


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for ps in rec(n, n if max_part is None else max_part):
        yield Partition(ps)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


@dataclass(frozen=True)
class MayaDiagram:
    """Set of integers containing everything below ``cutoff`` plus ``heads``.

    Canonical form: ``cutoff`` is the largest integer with all smaller
    integers present, so ``cutoff`` itself is not a member and every head is
    strictly above it.  Heads are stored in decreasing order.
    """

    cutoff: int
    heads: tuple[int, ...]

    def __init__(self, cutoff: int, heads: Iterable[int] = ()):
        members = set(int(h) for h in heads if h >= cutoff)
        c = int(cutoff)
        while c in members:
            members.discard(c)
            c += 1
        object.__setattr__(self, "cutoff", c)
        object.__setattr__(self, "heads", tuple(sorted(members, reverse=True)))

    def __contains__(self, k: int) -> bool:
        return k < self.cutoff or k in self.heads

    def count_above(self, k: int) -> int:
        """Number of members strictly greater than ``k``."""
        n = sum(1 for h in self.heads if h > k)
        if k < self.cutoff - 1:
            n += self.cutoff - 1 - k
        return n

    def add(self, k: int) -> "MayaDiagram":
        if k in self:
            raise ValueError(f"{k} is already a member")
        return MayaDiagram(self.cutoff, self.heads + (k,))

    def shift(self, k: int) -> "MayaDiagram":
        return MayaDiagram(self.cutoff + k, tuple(h + k for h in self.heads))

    def to_partition(self) -> Partition:
        r = len(self.heads)
        return Partition(m - self.cutoff - (r - i) for i, m in enumerate(self.heads, 1))

    def __str__(self):
        head = ",".join(map(str, sorted(self.heads)))
        return f"{{...,{self.cutoff - 1}}}" + (f" + {{{head}}}" if head else "")


def maya_to_partition(M: MayaDiagram) -> Partition:
    return M.to_partition()


def maya_of_partition(lam: Partition, slots: int | None = None) -> MayaDiagram:
    """Maya diagram ``{lam_i - i + slots : i >= 1}`` (``slots >= l(lam)``)."""
    n = lam.length if slots is None else slots
    if n < lam.length:
        raise ValueError(f"slots={n} is smaller than the length {lam.length}")
    parts = lam.parts + (0,) * (n - lam.length)
    return MayaDiagram(0, (p - i + n for i, p in enumerate(parts, 1)))


def maya_mn(m: int, n: int) -> MayaDiagram:
    """``M(m,n) = 3 D_m  u  (3 D_n + 1)  u  (3 D_0 + 2)`` with ``D_l = {k < l}``."""
    bound = -3 * (abs(m) + abs(n) + 2)
    top = 3 * max(m, n, 0) + 3
    members = [k for k in range(bound, top) if (k % 3 == 0 and k < 3 * m) or (k % 3 == 1 and k < 3 * n + 1) or (k % 3 == 2 and k < 2)]
    return MayaDiagram(bound, members)


def lambda_mn(m: int, n: int) -> Partition:
    """The 3-reduced partition attached to ``M(m, n)``; weight ``m^2+n^2-mn-m``."""
    return maya_mn(m, n).to_partition()
