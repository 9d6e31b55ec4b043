"""Deterministic plain-text reports with named pass/fail checks."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    actual: str
    passed: bool

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.name}: expected {self.expected}, got {self.actual}"


def check(name: str, expected: object, actual: object) -> Check:
    return Check(name, str(expected), str(actual), expected == actual)


@dataclass
class Report:
    command: str
    inputs: str = ""
    checks: list[Check] = field(default_factory=list)
    body: list[str] = field(default_factory=list)
    diagram: str | None = None

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.inputs.encode()).hexdigest()[:16]

    def render(self) -> str:
        out = [f"$ {self.command}", f"inputs: sha256:{self.digest}"]
        out += self.body
        if self.diagram:
            out += ["diagram:", *("  " + line for line in self.diagram.splitlines())]
        if self.checks:
            out.append("checks:")
            out += ["  " + c.line() for c in self.checks]
            passed = sum(c.passed for c in self.checks)
            out.append(f"result: {'OK' if self.ok else 'FAILED'} ({passed}/{len(self.checks)} checks passed)")
        return "\n".join(out) + "\n"
