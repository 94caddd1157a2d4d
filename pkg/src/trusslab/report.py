"""Verification reports: named checks with exact residuals."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

from .linmap import LinMap


@dataclass(frozen=True)
class CheckResult:
    """One verified law.

    `name` is a stable slug, `anchor` states the law as a formula.  For
    matrix laws a failing check carries the exact residual (lhs - rhs);
    set-level checks carry a witness string in `detail` instead.
    """

    name: str
    anchor: str
    passed: bool
    residual: Optional[LinMap] = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "pass": self.passed,
            "residual_zero": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    checks: Tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> Tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def named(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def merged(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        extra = tuple(
            CheckResult(prefix + c.name, c.anchor, c.passed, c.residual, c.detail)
            for c in other.checks)
        return VerificationReport(self.subject, self.checks + extra)

    def with_checks(self, *results: CheckResult) -> "VerificationReport":
        return VerificationReport(self.subject, self.checks + tuple(results))

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "pass": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }

    def text_lines(self, verbose: bool = False) -> list:
        lines = [f"{self.subject}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}: {c.anchor}")
            if not c.passed and c.detail:
                lines.append(f"         witness: {c.detail}")
            if not c.passed and c.residual is not None and verbose:
                for row in c.residual.rows():
                    lines.append("         " + " ".join(c.residual.field.fmt(v) for v in row))
        return lines

    def __str__(self) -> str:
        return "\n".join(self.text_lines())


def equation(name: str, anchor: str, lhs: LinMap, rhs: LinMap) -> CheckResult:
    """Check an exact matrix identity; residual is lhs - rhs."""
    residual = lhs - rhs
    if residual.is_zero():
        return CheckResult(name, anchor, True)
    return CheckResult(name, anchor, False, residual=residual)


def condition(name: str, anchor: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, anchor, ok, detail="" if ok else detail)


def report(subject: str, *checks: CheckResult) -> VerificationReport:
    return VerificationReport(subject, tuple(checks))
