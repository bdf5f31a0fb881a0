"""Structured pass/fail records for the verification suites.

Big integers are serialized as decimal strings so reports survive any JSON
consumer without precision loss.  A check may be marked *critical*: that is
reserved for counterexamples to open conjectures, which are discoveries to
publish rather than failures, and they carry a distinct exit status.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    claim: str
    inputs: str
    expected: str
    actual: str
    passed: bool
    critical: bool = False
    margin: str | None = None

    def to_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "inputs": self.inputs,
            "expected": self.expected,
            "actual": self.actual,
            "passed": self.passed,
        }
        if self.critical:
            out["critical"] = True
        if self.margin is not None:
            out["margin"] = self.margin
        return out


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckRecord] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    duration_seconds: float = 0.0

    @property
    def num_passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def num_failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed and not c.critical)

    @property
    def num_critical(self) -> int:
        return sum(1 for c in self.checks if c.critical)

    @property
    def exit_code(self) -> int:
        if self.num_critical:
            return 4
        return 0 if self.num_failed == 0 else 1

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
            "summary": {
                "passed": self.num_passed,
                "failed": self.num_failed,
                "critical": self.num_critical,
            },
            "duration_seconds": round(self.duration_seconds, 3),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def summary_line(self) -> str:
        status = "PASS" if self.exit_code == 0 else ("CRITICAL" if self.num_critical else "FAIL")
        return (
            f"[{status}] {self.suite}: {self.num_passed} passed, "
            f"{self.num_failed} failed, {self.num_critical} critical "
            f"({self.duration_seconds:.2f}s)"
        )


def combined_exit_code(reports: list[VerificationReport]) -> int:
    if any(r.num_critical for r in reports):
        return 4
    if any(r.num_failed for r in reports):
        return 1
    return 0
