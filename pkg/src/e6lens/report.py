"""Pass/fail reports shared by the verification sweeps."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class Report:
    title: str
    checks: tuple[Check, ...]

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_json(self):
        return json.dumps(
            [
                {"check_name": c.name, "pass": c.passed, "witness": c.witness}
                for c in self.checks
            ]
        )

    def lines(self):
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            suffix = f"  [{c.witness}]" if (c.witness and not c.passed) else ""
            out.append(f"{status}  {self.title}: {c.name}{suffix}")
        return out


def merge(title, reports):
    checks = []
    for r in reports:
        checks.extend(
            Check(f"{r.title}: {c.name}", c.passed, c.witness) for c in r.checks
        )
    return Report(title, tuple(checks))
