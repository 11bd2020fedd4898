"""Verification reports shared by every suite."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1


@dataclass
class Case:
    id: str
    passed: bool
    witness: str | None = None

    def to_json(self):
        out = {"id": self.id, "status": "PASS" if self.passed else "FAIL"}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    suite: str
    presentation: str | None = None
    params: dict = field(default_factory=dict)
    cases: list = field(default_factory=list)
    facts: list = field(default_factory=list)

    def add(self, case_id, passed, witness=None):
        """Record a case; the witness is kept only for failures."""
        self.cases.append(Case(case_id, bool(passed), None if passed else witness))
        return passed

    def check_equal(self, case_id, lhs, rhs):
        """Record ``lhs == rhs``; on failure the witness is the difference."""
        ok = lhs == rhs
        witness = None if ok else f"difference: {lhs - rhs}"
        return self.add(case_id, ok, witness)

    def note(self, text):
        self.facts.append(text)

    def extend(self, other, prefix=""):
        for c in other.cases:
            self.cases.append(Case(prefix + c.id, c.passed, c.witness))
        self.facts.extend(prefix + f for f in other.facts)

    @property
    def passed(self):
        return all(c.passed for c in self.cases)

    @property
    def verdict(self):
        return "PASS" if self.passed else "FAIL"

    @property
    def failures(self):
        return [c for c in self.cases if not c.passed]

    def to_dict(self):
        out = {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "presentation": self.presentation,
            "params": dict(sorted(self.params.items())),
            "cases": [c.to_json() for c in self.cases],
            "verdict": self.verdict,
        }
        if self.facts:
            out["facts"] = list(self.facts)
        return out

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def summary(self):
        bad = len(self.failures)
        return f"{self.suite}: {self.verdict} ({len(self.cases) - bad}/{len(self.cases)} cases)"
