"""Check results and error types shared by the verification code."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class OutOfRegionError(ValueError):
    """Lattice indices outside the region where the family is defined."""


class RegularizationError(ArithmeticError):
    """A Backlund transformation hit a vanishing denominator on a concrete solution."""


class WordParseError(ValueError):
    """Malformed Weyl word."""


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def __bool__(self):
        return self.passed

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class Report:
    """Ordered collection of checks; passes iff every check passes."""

    title: str = ""
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> CheckResult:
        c = CheckResult(name, bool(passed), detail)
        self.checks.append(c)
        return c

    def extend(self, other: "Report | Iterable[CheckResult]"):
        self.checks.extend(other.checks if isinstance(other, Report) else other)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def __len__(self):
        return len(self.checks)

    def summary(self) -> str:
        nfail = len(self.failures())
        head = f"{self.title}: " if self.title else ""
        return f"{head}{len(self.checks) - nfail}/{len(self.checks)} checks passed"
