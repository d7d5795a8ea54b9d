"""Run reports: a named suite, its parameters, and a list of checks."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction


def plain(value):
    """Reduce a value to JSON-safe data (numbers, strings, booleans, lists, dicts)."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, dict):
        return {str(plain(k)): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return str(value)


@dataclass
class Check:
    description: str
    expected: object
    actual: object
    passed: bool

    def __post_init__(self):
        self.expected = plain(self.expected)
        self.actual = plain(self.actual)
        self.passed = bool(self.passed)


@dataclass
class RunReport:
    suite: str
    parameters: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    elapsed: float = 0.0

    def __post_init__(self):
        self.parameters = plain(self.parameters)
        self.checks = [c if isinstance(c, Check) else Check(**c) for c in self.checks]

    def add(self, description: str, expected, actual, passed) -> Check:
        c = Check(description, expected, actual, passed)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> RunReport:
        return cls(
            suite=data["suite"],
            parameters=data.get("parameters", {}),
            checks=[Check(**c) for c in data.get("checks", [])],
            elapsed=data.get("elapsed", 0.0),
        )

    @classmethod
    def from_json(cls, text: str) -> RunReport:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        if self.parameters:
            lines.append("parameters: " + ", ".join(f"{k}={v}" for k, v in self.parameters.items()))
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.description}: expected {c.expected}, got {c.actual}")
        total = len(self.checks)
        ok = total - len(self.failures)
        lines.append(f"{ok}/{total} checks passed in {self.elapsed:.2f}s -> {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)
