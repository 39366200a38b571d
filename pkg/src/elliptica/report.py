"""Lightweight pass/fail reports returned by the verification-style operations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple


@dataclass
class CheckReport:
    """Outcome of a multi-part consistency check."""

    name: str
    checks: List[Tuple[str, bool, str]] = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks.append((label, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> List[Tuple[str, str]]:
        return [(label, detail) for label, ok, detail in self.checks if not ok]

    def summary(self) -> str:
        status = "pass" if self.ok else "FAIL"
        lines = [f"[{status}] {self.name} ({len(self.checks)} checks)"]
        for label, ok, detail in self.checks:
            if not ok:
                lines.append(f"    FAIL {label}: {detail}")
        return "\n".join(lines)
