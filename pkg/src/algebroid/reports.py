"""Deterministic check reports.

A report is a named list of per-check verdicts (pass / fail+witness /
inconclusive) plus structure dimensions and convention notes.  The JSON
form is byte-stable for fixed inputs: check items are sorted by name,
dictionaries are emitted with sorted keys, and nothing time- or
environment-dependent enters the body.  Wall-clock timing, when wanted,
goes to stderr and never into the report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class CheckItem:
    name: str
    verdict: str
    witness: str | None = None
    note: str | None = None

    def to_json(self):
        out = {"name": self.name, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass
class Report:
    title: str
    dims: dict = field(default_factory=dict)
    conventions: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    def check(self, name: str, ok: bool, witness=None, note=None):
        self.checks.append(CheckItem(
            name,
            PASS if ok else FAIL,
            witness=None if ok else (witness if witness is None or isinstance(witness, str) else str(witness)),
            note=note,
        ))
        return ok

    def add(self, item: CheckItem):
        self.checks.append(item)

    def inconclusive(self, name: str, note=None):
        self.checks.append(CheckItem(name, INCONCLUSIVE, note=note))

    def note_convention(self, text: str):
        if text not in self.conventions:
            self.conventions.append(text)

    def dim(self, name: str, value: int):
        self.dims[name] = value

    def merge(self, other: "Report", prefix: str = ""):
        for item in other.checks:
            self.checks.append(CheckItem(
                (prefix + item.name) if prefix else item.name,
                item.verdict, item.witness, item.note))
        for k, v in other.dims.items():
            self.dims.setdefault((prefix + k) if prefix else k, v)
        for c in other.conventions:
            self.note_convention(c)
        return self

    @property
    def passed(self) -> bool:
        return all(c.verdict == PASS for c in self.checks)

    def passed_strict(self) -> bool:
        return self.passed

    def ok(self, strict: bool = False) -> bool:
        """No failures; with strict=True, no inconclusives either."""
        bad = {FAIL, INCONCLUSIVE} if strict else {FAIL}
        return all(c.verdict not in bad for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.verdict == FAIL]

    def inconclusives(self):
        return [c for c in self.checks if c.verdict == INCONCLUSIVE]

    def to_json(self):
        return {
            "title": self.title,
            "dims": dict(sorted(self.dims.items())),
            "conventions": list(self.conventions),
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.name)],
            "summary": {
                "total": len(self.checks),
                "fail": len(self.failures()),
                "inconclusive": len(self.inconclusives()),
            },
        }

    def to_text(self) -> str:
        lines = ["# %s" % self.title]
        for k, v in sorted(self.dims.items()):
            lines.append("dim %s = %d" % (k, v))
        for c in sorted(self.checks, key=lambda c: c.name):
            line = "%-12s %s" % (c.verdict.upper(), c.name)
            if c.witness:
                line += "  [witness: %s]" % c.witness
            if c.note:
                line += "  (%s)" % c.note
            lines.append(line)
        return "\n".join(lines)


def dumps(report: Report) -> str:
    """Canonical byte-stable JSON serialisation."""
    return json.dumps(report.to_json(), sort_keys=True, indent=1) + "\n"
