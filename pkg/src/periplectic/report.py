"""Pass/fail report shared by the verification routines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple


@dataclass
class CheckReport:
    title: str
    lines: List[Tuple[str, bool, str]] = field(default_factory=list)

    def add(self, label: str, ok: bool, value: str = ""):
        self.lines.append((label, bool(ok), value))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.lines)

    def render(self) -> str:
        out = [self.title]
        for label, ok, value in self.lines:
            out.append(f"  [{'PASS' if ok else 'FAIL'}] {label}" + (f": {value}" if value else ""))
        return "\n".join(out)

    def as_dict(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "checks": [{"label": l, "passed": ok, "value": v} for l, ok, v in self.lines]}
