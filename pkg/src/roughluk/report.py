"""Verification reports shared by every exhaustive checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    counterexample: dict[str, Any] | None = None
    cases: int = 0

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        out["cases"] = self.cases
        return out


@dataclass
class Report:
    """An ordered list of named pass/fail checks.

    A failing check carries the first counterexample found, so a report can
    be printed or serialized without re-running anything.
    """

    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, counterexample: dict[str, Any] | None = None, cases: int = 0) -> Check:
        check = Check(name, counterexample is None, counterexample, cases)
        self.checks.append(check)
        return check

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.counterexample, c.cases))

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self) -> dict[str, Any]:
        return {"title": self.title, "checks": [c.to_json() for c in self.checks]}

    def summary(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            line = f"  [{'pass' if c.passed else 'FAIL'}] {c.name}"
            if c.counterexample is not None:
                line += f"  counterexample={c.counterexample}"
            lines.append(line)
        return "\n".join(lines)
